#include "matrix.hpp"

namespace dpgc {

namespace {
const Complex I_UNIT(0.0, 1.0);
}

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m << 0, -I_UNIT, I_UNIT, 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Mat gate(const std::string& name) {
  if (name == "X") return pauli_x();
  if (name == "Y") return pauli_y();
  if (name == "Z") return pauli_z();
  if (name == "H") {
    Mat m(2, 2);
    m << 1, 1, 1, -1;
    return m * M_SQRT1_2;
  }
  if (name == "T") {
    Mat m = Mat::Identity(2, 2);
    m(1, 1) = std::exp(I_UNIT * (M_PI / 4.0));
    return m;
  }
  if (name == "S") {
    Mat m = Mat::Identity(2, 2);
    m(1, 1) = I_UNIT;
    return m;
  }
  if (name == "E") {
    Mat m = Mat::Identity(4, 4);
    m(3, 3) = -1;
    return m;
  }
  throw validation_error("unknown gate name: " + name);
}

Mat projector_alpha(const Angle& alpha, int r) {
  double sign = (r & 1) ? -1.0 : 1.0;
  return 0.5 * (Mat::Identity(2, 2) + sign * (cos_angle(alpha) * pauli_x() + sin_angle(alpha) * pauli_y()));
}

Mat projector_z(int r) {
  double sign = (r & 1) ? -1.0 : 1.0;
  return 0.5 * (Mat::Identity(2, 2) + sign * pauli_z());
}

Mat projector_xs(int s, int r) {
  if ((s & 1) == 0) return projector_alpha(Angle(0, 1), r);
  Mat sg = gate("S");
  return sg * projector_alpha(Angle(0, 1), r) * sg.adjoint();
}

Mat projector(const std::string& kind, const Angle& alpha, int param_bit, int r) {
  if (kind == "Z") return projector_z(r);
  if (kind == "alpha") return projector_alpha(alpha, r);
  if (kind == "X-with-S-twist") return projector_xs(param_bit, r);
  throw validation_error("unknown projector kind: " + kind);
}

double max_abs(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

double max_abs_diff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw validation_error("matrix dimension mismatch in comparison");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Mat& a, double tol) {
  return a.rows() == a.cols() && max_abs_diff(a, a.adjoint()) <= tol;
}

double min_eigenvalue(const Mat& hermitian) {
  if (hermitian.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DensityMatrix make_density(int qubits, Mat rho) {
  std::int64_t d = pow2(qubits);
  if (rho.rows() != d || rho.cols() != d)
    throw validation_error("density matrix has wrong dimension");
  if (!is_hermitian(rho, 1e-10)) throw validation_error("density matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-10)
    throw validation_error("density matrix trace is not 1");
  if (min_eigenvalue(0.5 * (rho + rho.adjoint())) < -1e-9)
    throw validation_error("density matrix has negative eigenvalue");
  return DensityMatrix{qubits, std::move(rho)};
}

DensityMatrix ghz_density(int n) {
  if (n < 1) throw validation_error("ghz_density needs n >= 1");
  std::int64_t d = pow2(n);
  Vec psi = Vec::Zero(d);
  psi(0) = M_SQRT1_2;
  psi(d - 1) = M_SQRT1_2;
  return DensityMatrix{n, psi * psi.adjoint()};
}

DensityMatrix zero_density(int n) {
  std::int64_t d = pow2(n);
  Mat rho = Mat::Zero(d, d);
  rho(0, 0) = 1.0;
  return DensityMatrix{n, std::move(rho)};
}

DensityMatrix max_mixed_density(int n) {
  std::int64_t d = pow2(n);
  return DensityMatrix{n, Mat::Identity(d, d) / static_cast<double>(d)};
}

double expectation(const DensityMatrix& rho, const Mat& op) {
  return (rho.rho * op).trace().real();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat kron_all(const std::vector<Mat>& ops) {
  Mat out = Mat::Identity(1, 1);
  for (const Mat& op : ops) out = kron(out, op);
  return out;
}

}  // namespace dpgc
