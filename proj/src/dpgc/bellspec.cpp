#include "bellspec.hpp"

#include "builder.hpp"

namespace dpgc {

BellInstrumentSpec BellInstrumentSpec::plain_xy(int m) {
  BellInstrumentSpec s;
  s.m = m;
  s.bases.assign(m, "xy");
  s.adaptivity.assign(m, AdaptiveTerm{});
  return s;
}

void BellInstrumentSpec::validate() const {
  if (m < 1 || m > 8) throw validation_error("Bell instrument needs 1 <= m <= 8 qubits");
  if (int(bases.size()) != m || int(adaptivity.size()) != m)
    throw validation_error("Bell instrument spec has wrong per-qubit list sizes");
  for (const std::string& b : bases)
    if (b != "xy" && b != "z") throw validation_error("unknown single-qubit base: " + b);
  for (int j = 0; j < m; ++j) {
    if (adaptivity[j].constant != 0 && adaptivity[j].constant != 1)
      throw validation_error("adaptivity constants are bits");
    for (int t : adaptivity[j].outcomes)
      if (t < 1 || t > j)
        throw validation_error("adaptivity must reference earlier qubits only");
  }
}

Graph induced_graph(const BellInstrumentSpec& spec) {
  spec.validate();
  const int m = spec.m;
  GraphBuilder gb(m, 0, m, m);

  std::vector<int> uses(m + 1, 0);
  for (int j = 0; j < m; ++j)
    for (int t : spec.adaptivity[j].outcomes) ++uses[t];

  std::vector<std::vector<Endpoint>> taps(m + 1);

  for (int j = 1; j <= m; ++j) {
    const AdaptiveTerm& at = spec.adaptivity[j - 1];
    std::string tag = "q" + std::to_string(j);

    Endpoint r2;
    if (at.outcomes.empty()) {
      std::string cv = gb.add(tag + ".const", make_label(at.constant ? "one" : "zero"), {});
      r2 = gb.vo(cv);
    } else {
      Endpoint acc = taps[at.outcomes[0]].back();
      taps[at.outcomes[0]].pop_back();
      for (std::size_t t = 1; t < at.outcomes.size(); ++t) {
        Endpoint nxt = taps[at.outcomes[t]].back();
        taps[at.outcomes[t]].pop_back();
        std::string x = gb.add(tag + ".x" + std::to_string(t), make_label("xor"), {}, {acc, nxt});
        acc = gb.vo(x);
      }
      if (at.constant) {
        std::string nv = gb.add(tag + ".flip", make_label("not"), {}, {acc});
        acc = gb.vo(nv);
      }
      r2 = acc;
    }

    std::string w = gb.add(tag, make_label(spec.bases[j - 1] == "z" ? "wrap.z" : "wrap.xy"),
                           {gb.bh(j)}, {gb.bv(j), r2});
    gb.out_v(j, gb.vo(w, 1));

    Endpoint cur = gb.vo(w, 2);
    if (uses[j] == 0) {
      gb.add(tag + ".sink", make_label("d"), {}, {cur});
    } else {
      for (int t = 1; t < uses[j]; ++t) {
        std::string c = gb.add(tag + ".c" + std::to_string(t), make_label("c"), {}, {cur});
        taps[j].push_back(gb.vo(c, 1));
        cur = gb.vo(c, 2);
      }
      taps[j].push_back(cur);
    }
  }
  return std::move(gb).done();
}

BellScenario scenario_from(const DensityMatrix& rho, const BellInstrumentSpec& spec,
                           bool require_compatibility) {
  if (rho.qubits != spec.m)
    throw validation_error("state and Bell instrument qubit counts differ");
  AdaptiveInstrument phi = evaluate(induced_graph(spec), Model::ATilde);
  BellScenario sc;
  sc.m = spec.m;
  for (std::uint32_t i = 0; i < (1u << spec.m); ++i) sc.rows.push_back(born_at(rho, phi, i));
  if (require_compatibility && !check_compatibility(sc, 1e-9))
    throw validation_error(
        "scenario is not face-compatible: an adaptive feed leaks a setting into an earlier "
        "party's marginal");
  return sc;
}

BoundReport bound_check(const DensityMatrix& rho, const BellInstrumentSpec& spec,
                        const AffineMap& h, const TruthTable& f, const AffineMap& tau,
                        bool exact_lp) {
  if (h.in_bits != spec.m) throw validation_error("post-processing map has wrong input arity");
  if (tau.out_bits != spec.m) throw validation_error("settings map has wrong output arity");
  if (f.in_bits != tau.in_bits || f.out_bits != h.out_bits)
    throw validation_error("target function arities do not match the pipeline");

  // the inequality only needs the LP decomposition, so adaptive scenarios
  // that fail strict face compatibility are still checked
  BellScenario sc = scenario_from(rho, spec, false);

  BoundReport rep;
  rep.exact = exact_lp;
  rep.compatible = check_compatibility(sc, 1e-9);
  rep.ncf_value = exact_lp ? double(ncf_exact(sc, false)) : ncf(sc, false);
  rep.nu_value = nu(f);

  KleisliMap p;
  p.k = tau.in_bits;
  p.l = h.out_bits;
  for (std::uint32_t a = 0; a < (1u << p.k); ++a) {
    std::vector<double> row(std::size_t(1) << p.l, 0.0);
    const auto& src = sc.rows[tau.apply(a)];
    for (std::uint32_t s = 0; s < (1u << spec.m); ++s) row[h.apply(s)] += src[s];
    p.rows.push_back(std::move(row));
  }

  rep.lhs = p_succ(p, f);
  rep.rhs = 1.0 - rep.ncf_value * double(rep.nu_value);
  rep.holds = rep.lhs <= rep.rhs + 1e-7;
  return rep;
}

}  // namespace dpgc
