#pragma once

#include "evaluate.hpp"
#include "scenario.hpp"

namespace dpgc {

// Affine adaptivity for one qubit: its wrapped instrument's second setting
// input is constant xor the xor of earlier outcomes (1-based qubit indices).
struct AdaptiveTerm {
  int constant = 0;
  std::vector<int> outcomes;
};

// An m-qubit Bell instrument: per-qubit wrapped single-qubit instruments
// ("xy" is the S^s-twisted X measurement family, "z" ignores its setting)
// with affine adaptivity respecting the qubit order.
struct BellInstrumentSpec {
  int m = 0;
  std::vector<std::string> bases;        // size m, "xy" or "z"
  std::vector<AdaptiveTerm> adaptivity;  // size m; entry j references qubits < j

  static BellInstrumentSpec plain_xy(int m);
  void validate() const;
};

// The wrapped-instrument graph the spec induces (A~ labeled).
Graph induced_graph(const BellInstrumentSpec& spec);

// rows p_i(s) = Tr(Phi_i^s(rho)). Non-adaptive specs always satisfy face
// compatibility; adaptive feeds can leak an earlier setting into a later
// marginal, in which case the strict mode rejects the scenario.
BellScenario scenario_from(const DensityMatrix& rho, const BellInstrumentSpec& spec,
                           bool require_compatibility = true);

struct BoundReport {
  double lhs = 0;
  double rhs = 0;
  double ncf_value = 0;
  Rational nu_value;
  bool exact = false;
  bool compatible = false;
  bool holds = false;
};

// Checks lhs = p_succ(h o scenario o tau, f) against rhs = 1 - ncf * nu(f)
// with 1e-7 slack. tau pulls contexts back along an affine settings map; pass
// AffineMap::identity(m) for the plain setup.
BoundReport bound_check(const DensityMatrix& rho, const BellInstrumentSpec& spec,
                        const AffineMap& h, const TruthTable& f, const AffineMap& tau,
                        bool exact_lp = false);

}  // namespace dpgc
