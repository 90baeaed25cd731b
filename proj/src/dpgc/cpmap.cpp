#include "cpmap.hpp"

#include <algorithm>

namespace dpgc {

namespace {

int qubits_for_dim(Eigen::Index d, const char* what) {
  int q = 0;
  std::int64_t p = 1;
  while (p < d) { p <<= 1; ++q; }
  if (p != d) throw validation_error(std::string(what) + " dimension is not a power of 2");
  return q;
}

}  // namespace

CPMap cp_identity(int qubits) {
  std::int64_t d2 = pow2(2 * qubits);
  return CPMap{qubits, qubits, Mat::Identity(d2, d2)};
}

CPMap cp_zero(int in_qubits, int out_qubits) {
  return CPMap{in_qubits, out_qubits, Mat::Zero(pow2(2 * out_qubits), pow2(2 * in_qubits))};
}

CPMap cp_from_conjugation(const Mat& a) {
  int in_q = qubits_for_dim(a.cols(), "conjugation input");
  int out_q = qubits_for_dim(a.rows(), "conjugation output");
  return CPMap{in_q, out_q, kron(a.conjugate(), a)};
}

CPMap cp_from_kraus(const std::vector<Mat>& kraus) {
  if (kraus.empty()) throw validation_error("empty Kraus list");
  CPMap out = cp_from_conjugation(kraus.front());
  for (std::size_t i = 1; i < kraus.size(); ++i) {
    CPMap next = cp_from_conjugation(kraus[i]);
    if (next.in_qubits != out.in_qubits || next.out_qubits != out.out_qubits)
      throw validation_error("Kraus operators have mismatched dimensions");
    out.sop += next.sop;
  }
  return out;
}

CPMap compose_cp(const CPMap& after, const CPMap& before) {
  if (after.in_qubits != before.out_qubits)
    throw validation_error("compose_cp dimension mismatch");
  return CPMap{before.in_qubits, after.out_qubits, after.sop * before.sop};
}

CPMap tensor_cp(const CPMap& a, const CPMap& b) {
  const std::int64_t dia = a.din(), dib = b.din(), doa = a.dout(), dob = b.dout();
  const std::int64_t din = dia * dib, dout = doa * dob;
  Mat sop(dout * dout, din * din);
  for (std::int64_t ca = 0; ca < doa; ++ca)
    for (std::int64_t ra = 0; ra < doa; ++ra)
      for (std::int64_t cb = 0; cb < dob; ++cb)
        for (std::int64_t rb = 0; rb < dob; ++rb) {
          std::int64_t row = (ca * dob + cb) * dout + (ra * dob + rb);
          for (std::int64_t ca2 = 0; ca2 < dia; ++ca2)
            for (std::int64_t ra2 = 0; ra2 < dia; ++ra2)
              for (std::int64_t cb2 = 0; cb2 < dib; ++cb2)
                for (std::int64_t rb2 = 0; rb2 < dib; ++rb2) {
                  std::int64_t col = (ca2 * dib + cb2) * din + (ra2 * dib + rb2);
                  sop(row, col) = a.sop(ca * doa + ra, ca2 * dia + ra2) *
                                  b.sop(cb * dob + rb, cb2 * dib + rb2);
                }
        }
  return CPMap{a.in_qubits + b.in_qubits, a.out_qubits + b.out_qubits, std::move(sop)};
}

CPMap add_cp(const CPMap& a, const CPMap& b) {
  if (a.in_qubits != b.in_qubits || a.out_qubits != b.out_qubits)
    throw validation_error("add_cp dimension mismatch");
  return CPMap{a.in_qubits, a.out_qubits, a.sop + b.sop};
}

CPMap scale_cp(const CPMap& a, double factor) {
  if (factor < 0) throw validation_error("scale_cp needs a nonnegative factor");
  return CPMap{a.in_qubits, a.out_qubits, factor * a.sop};
}

Mat apply_cp(const CPMap& phi, const Mat& x) {
  const std::int64_t di = phi.din(), dout = phi.dout();
  if (x.rows() != di || x.cols() != di)
    throw validation_error("apply_cp operand dimension mismatch");
  Vec v(di * di);
  for (std::int64_t c = 0; c < di; ++c)
    for (std::int64_t r = 0; r < di; ++r) v(c * di + r) = x(r, c);
  Vec w = phi.sop * v;
  Mat out(dout, dout);
  for (std::int64_t c = 0; c < dout; ++c)
    for (std::int64_t r = 0; r < dout; ++r) out(r, c) = w(c * dout + r);
  return out;
}

CPMap trace_cp(int m) {
  std::int64_t d = pow2(m);
  Mat sop = Mat::Zero(1, d * d);
  for (std::int64_t i = 0; i < d; ++i) sop(0, i * d + i) = 1.0;
  return CPMap{m, 0, std::move(sop)};
}

CPMap scalar_cp(double c) {
  if (c < 0) throw validation_error("scalar_cp needs c >= 0");
  Mat sop(1, 1);
  sop(0, 0) = c;
  return CPMap{0, 0, std::move(sop)};
}

Mat choi(const CPMap& phi) {
  const std::int64_t di = phi.din(), dout = phi.dout();
  Mat c(di * dout, di * dout);
  // Phi(E_ij)(k,l) = sop(l*dout + k, j*din + i)
  for (std::int64_t i = 0; i < di; ++i)
    for (std::int64_t j = 0; j < di; ++j)
      for (std::int64_t k = 0; k < dout; ++k)
        for (std::int64_t l = 0; l < dout; ++l)
          c(i * dout + k, j * dout + l) = phi.sop(l * dout + k, j * di + i);
  return c;
}

bool is_cp(const CPMap& phi, double tol) {
  Mat c = choi(phi);
  if (!is_hermitian(c, tol)) return false;
  return min_eigenvalue(0.5 * (c + c.adjoint())) >= -tol;
}

bool is_tp(const CPMap& phi, double tol) {
  const std::int64_t di = phi.din(), dout = phi.dout();
  Mat tr_out = Mat::Zero(di, di);
  for (std::int64_t i = 0; i < di; ++i)
    for (std::int64_t j = 0; j < di; ++j)
      for (std::int64_t k = 0; k < dout; ++k)
        tr_out(i, j) += phi.sop(k * dout + k, j * di + i);
  return max_abs_diff(tr_out, Mat::Identity(di, di)) <= tol;
}

CPMap permute_wires(const std::vector<int>& perm, int m) {
  if (static_cast<int>(perm.size()) != m)
    throw validation_error("permute_wires: permutation length mismatch");
  std::vector<bool> seen(m, false);
  for (int p : perm) {
    if (p < 1 || p > m || seen[p - 1]) throw validation_error("permute_wires: not a permutation");
    seen[p - 1] = true;
  }
  std::int64_t d = pow2(m);
  Mat u = Mat::Zero(d, d);
  for (std::int64_t x = 0; x < d; ++x) {
    std::int64_t y = 0;
    for (int j = 0; j < m; ++j) {
      std::int64_t bit = (x >> (m - perm[j])) & 1;  // input slot perm[j]
      y |= bit << (m - 1 - j);                      // output slot j+1
    }
    u(y, x) = 1.0;
  }
  return cp_from_conjugation(u);
}

double max_abs_diff_cp(const CPMap& a, const CPMap& b) {
  if (a.in_qubits != b.in_qubits || a.out_qubits != b.out_qubits)
    throw validation_error("CP map arity mismatch in comparison");
  return max_abs_diff(a.sop, b.sop);
}

}  // namespace dpgc
