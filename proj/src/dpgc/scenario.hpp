#pragma once

#include <cstdint>
#include <vector>

#include "boolean.hpp"
#include "rational.hpp"

namespace dpgc {

// Generating simplex sigma_{i1..im} of the iterated-join sphere; faces forget
// one party, and forgetting the last party does not depend on its bit.
struct SphereSimplex {
  int m = 0;
  std::uint32_t bits = 0;  // big-endian: party 1 is the most significant bit

  int bit(int party) const { return int((bits >> (m - party)) & 1u); }
  // d_j, 1-based party index; returns the (m-1)-dimensional face
  SphereSimplex face(int party) const;
};

// Family of outcome distributions indexed by the 2^m measurement contexts.
struct BellScenario {
  int m = 0;
  std::vector<std::vector<double>> rows;  // [2^m settings][2^m outcomes]
};

// per-party no-signaling: marginals over one outcome bit do not depend on
// that party's setting
bool check_compatibility(const BellScenario& sc, double tol = 1e-9);

// deterministic local strategy: per party a function Z_2 -> Z_2
struct LocalStrategy {
  int m = 0;
  std::uint32_t code = 0;  // 2 bits per party: g_j(0) and g_j(1)

  int apply_party(int party, int input) const {
    return int((code >> (2 * (party - 1) + input)) & 1u);
  }
  std::uint32_t apply(std::uint32_t settings) const;
};

std::vector<LocalStrategy> strategies(int m);  // all 4^m
BellScenario strategy_scenario(const LocalStrategy& g);
BellScenario strategy_mixture(int m, const std::vector<double>& weights);
KleisliMap kleisli_of(const BellScenario& sc);

std::vector<LocalStrategy> support(const BellScenario& sc, double tol = 1e-9);
bool is_strongly_contextual(const BellScenario& sc, double tol = 1e-9);

// The noncontextual fraction: the LP optimum of the maximal strategy-mixture
// weight dominated by the scenario. CF = 1 - NCF. Incompatible scenarios are
// rejected unless require_compatibility is cleared (the LP itself is
// well-defined for any outcome family).
double ncf(const BellScenario& sc, bool require_compatibility = true);
Rational ncf_exact(const BellScenario& sc, bool require_compatibility = true);

}  // namespace dpgc
