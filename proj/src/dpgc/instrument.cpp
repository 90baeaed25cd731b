#include "instrument.hpp"

namespace dpgc {

void AdaptiveInstrument::add(std::uint32_t a, std::uint32_t b, CPMap phi) {
  if (phi.in_qubits != m || phi.out_qubits != n)
    throw validation_error("instrument entry has wrong qubit arity");
  auto [it, fresh] = table.emplace(std::make_pair(a, b), std::move(phi));
  if (!fresh) throw validation_error("duplicate instrument table entry");
}

bool AdaptiveInstrument::is_valid(double tol) const {
  for (const auto& [key, phi] : table) {
    if (key.first >= (1u << k) || key.second >= (1u << l)) return false;
    if (!is_cp(phi, tol)) return false;
  }
  for (std::uint32_t a = 0; a < (1u << k); ++a) {
    CPMap row = cp_zero(m, n);
    for (std::uint32_t b = 0; b < (1u << l); ++b)
      if (const CPMap* e = entry(a, b)) row.sop += e->sop;
    if (!is_tp(row, tol)) return false;
  }
  return true;
}

AdaptiveInstrument compose_h(const AdaptiveInstrument& phi, const AdaptiveInstrument& psi) {
  if (phi.n != psi.m)
    throw validation_error("compose_h qubit arity mismatch: " + std::to_string(phi.n) + " vs " +
                           std::to_string(psi.m));
  AdaptiveInstrument out;
  out.k = phi.k + psi.k;
  out.l = phi.l + psi.l;
  out.m = phi.m;
  out.n = psi.n;
  for (const auto& [kp, p] : phi.table)
    for (const auto& [kq, q] : psi.table) {
      std::uint32_t a = (kp.first << psi.k) | kq.first;
      std::uint32_t b = (kp.second << psi.l) | kq.second;
      out.table.emplace(std::make_pair(a, b), compose_cp(q, p));
    }
  return out;
}

AdaptiveInstrument compose_v(const AdaptiveInstrument& top, const AdaptiveInstrument& bottom) {
  if (top.l != bottom.k)
    throw validation_error("compose_v bit arity mismatch: " + std::to_string(top.l) + " vs " +
                           std::to_string(bottom.k));
  AdaptiveInstrument out;
  out.k = top.k;
  out.l = bottom.l;
  out.m = top.m + bottom.m;
  out.n = top.n + bottom.n;
  for (const auto& [kp, p] : top.table)
    for (const auto& [kq, q] : bottom.table) {
      if (kp.second != kq.first) continue;  // the summed-over middle bits
      CPMap term = tensor_cp(p, q);
      auto key = std::make_pair(kp.first, kq.second);
      auto it = out.table.find(key);
      if (it == out.table.end())
        out.table.emplace(key, std::move(term));
      else
        it->second.sop += term.sop;
    }
  return out;
}

AdaptiveInstrument id_h(int m) {
  AdaptiveInstrument out;
  out.m = out.n = m;
  out.table.emplace(std::make_pair(0u, 0u), cp_identity(m));
  return out;
}

AdaptiveInstrument parallel(const AdaptiveInstrument& a, const AdaptiveInstrument& b) {
  AdaptiveInstrument out;
  out.k = a.k + b.k;
  out.l = a.l + b.l;
  out.m = a.m + b.m;
  out.n = a.n + b.n;
  for (const auto& [ka, pa] : a.table)
    for (const auto& [kb, pb] : b.table)
      out.table.emplace(std::make_pair((ka.first << b.k) | kb.first,
                                       (ka.second << b.l) | kb.second),
                        tensor_cp(pa, pb));
  return out;
}

AdaptiveInstrument id_v(int k) {
  AdaptiveInstrument out;
  out.k = out.l = k;
  for (std::uint32_t a = 0; a < (1u << k); ++a)
    out.table.emplace(std::make_pair(a, a), scalar_cp(1.0));
  return out;
}

KleisliMap kleisli(const AdaptiveInstrument& phi) {
  if (phi.m != 0 || phi.n != 0)
    throw validation_error("kleisli projection needs a purely classical instrument");
  KleisliMap out;
  out.k = phi.k;
  out.l = phi.l;
  out.rows.assign(std::size_t(1) << phi.k, Distribution(std::size_t(1) << phi.l, 0.0));
  for (const auto& [key, p] : phi.table) {
    Complex c = p.sop(0, 0);
    if (std::abs(c.imag()) > 1e-9) throw validation_error("scalar entry is not real");
    out.rows[key.first][key.second] = c.real();
  }
  for (const auto& row : out.rows) {
    double s = 0;
    for (double p : row) s += p;
    if (std::abs(s - 1.0) > 1e-9)
      throw validation_error("Kleisli row does not sum to 1");
  }
  return out;
}

CPMap channel(const AdaptiveInstrument& phi) {
  if (phi.k != 0 || phi.l != 0)
    throw validation_error("channel projection needs trivial classical arities");
  CPMap out = cp_zero(phi.m, phi.n);
  if (const CPMap* e = phi.entry(0, 0)) out.sop = e->sop;
  return out;
}

Distribution born_at(const DensityMatrix& rho, const AdaptiveInstrument& phi, std::uint32_t a) {
  if (phi.n != 0) throw validation_error("born needs an instrument with no quantum output");
  if (rho.qubits != phi.m) throw validation_error("born state dimension mismatch");
  Distribution out(std::size_t(1) << phi.l, 0.0);
  for (std::uint32_t b = 0; b < (1u << phi.l); ++b)
    if (const CPMap* e = phi.entry(a, b)) out[b] = apply_cp(*e, rho.rho)(0, 0).real();
  double s = 0;
  for (double p : out) s += p;
  if (std::abs(s - 1.0) > 1e-9) throw validation_error("born distribution does not sum to 1");
  return out;
}

Distribution born(const DensityMatrix& rho, const AdaptiveInstrument& phi) {
  if (phi.k != 0) throw validation_error("born needs an instrument with no classical input");
  return born_at(rho, phi, 0);
}

double instrument_distance(const AdaptiveInstrument& a, const AdaptiveInstrument& b) {
  if (a.k != b.k || a.l != b.l || a.m != b.m || a.n != b.n)
    throw validation_error("instrument arity mismatch in comparison");
  double worst = 0.0;
  for (std::uint32_t x = 0; x < (1u << a.k); ++x)
    for (std::uint32_t y = 0; y < (1u << a.l); ++y) {
      const CPMap* pa = a.entry(x, y);
      const CPMap* pb = b.entry(x, y);
      if (!pa && !pb) continue;
      if (pa && pb) {
        worst = std::max(worst, max_abs_diff(pa->sop, pb->sop));
      } else {
        const CPMap* present = pa ? pa : pb;
        worst = std::max(worst, max_abs(present->sop));
      }
    }
  return worst;
}

bool instrument_equal(const AdaptiveInstrument& a, const AdaptiveInstrument& b, double tol) {
  return instrument_distance(a, b) <= tol;
}

}  // namespace dpgc
