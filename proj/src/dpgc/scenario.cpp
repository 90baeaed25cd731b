#include "scenario.hpp"

#include <functional>

#include "lp.hpp"

namespace dpgc {

SphereSimplex SphereSimplex::face(int party) const {
  if (party < 1 || party > m) throw validation_error("face index out of range");
  std::uint32_t high = (party > 1) ? (bits >> (m - party + 1)) << (m - party) : 0u;
  std::uint32_t low = bits & ((1u << (m - party)) - 1u);
  return SphereSimplex{m - 1, high | low};
}

bool check_compatibility(const BellScenario& sc, double tol) {
  const std::uint32_t ni = 1u << sc.m;
  if (sc.rows.size() != ni) throw validation_error("scenario has wrong row count");
  for (const auto& row : sc.rows) {
    if (row.size() != ni) throw validation_error("scenario has wrong outcome count");
    double s = 0;
    for (double p : row) {
      if (p < -tol) return false;
      s += p;
    }
    if (std::abs(s - 1.0) > tol) return false;
  }
  // per-party marginal independence
  for (int j = 1; j <= sc.m; ++j) {
    std::uint32_t jb = 1u << (sc.m - j);
    for (std::uint32_t i = 0; i < ni; ++i) {
      if (i & jb) continue;  // compare i with i + e_j once
      for (std::uint32_t srest = 0; srest < ni; ++srest) {
        if (srest & jb) continue;  // outcomes with the j-th bit zeroed
        double a = sc.rows[i][srest] + sc.rows[i][srest | jb];
        double b = sc.rows[i | jb][srest] + sc.rows[i | jb][srest | jb];
        if (std::abs(a - b) > tol) return false;
      }
    }
  }
  return true;
}

std::uint32_t LocalStrategy::apply(std::uint32_t settings) const {
  std::uint32_t out = 0;
  for (int j = 1; j <= m; ++j) {
    int input = int((settings >> (m - j)) & 1u);
    out |= std::uint32_t(apply_party(j, input)) << (m - j);
  }
  return out;
}

std::vector<LocalStrategy> strategies(int m) {
  if (m < 1 || m > 8) throw validation_error("strategies supported for 1 <= m <= 8");
  std::vector<LocalStrategy> out;
  out.reserve(std::size_t(1) << (2 * m));
  for (std::uint32_t code = 0; code < (1u << (2 * m)); ++code) out.push_back({m, code});
  return out;
}

BellScenario strategy_scenario(const LocalStrategy& g) {
  BellScenario sc;
  sc.m = g.m;
  std::uint32_t ni = 1u << g.m;
  sc.rows.assign(ni, std::vector<double>(ni, 0.0));
  for (std::uint32_t i = 0; i < ni; ++i) sc.rows[i][g.apply(i)] = 1.0;
  return sc;
}

BellScenario strategy_mixture(int m, const std::vector<double>& weights) {
  auto gs = strategies(m);
  if (weights.size() != gs.size())
    throw validation_error("mixture needs one weight per strategy");
  double total = 0;
  for (double w : weights) {
    if (w < 0) throw validation_error("mixture weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw validation_error("mixture weights must sum to 1");
  BellScenario sc;
  sc.m = m;
  std::uint32_t ni = 1u << m;
  sc.rows.assign(ni, std::vector<double>(ni, 0.0));
  for (std::size_t gi = 0; gi < gs.size(); ++gi) {
    if (weights[gi] == 0.0) continue;
    for (std::uint32_t i = 0; i < ni; ++i) sc.rows[i][gs[gi].apply(i)] += weights[gi];
  }
  return sc;
}

KleisliMap kleisli_of(const BellScenario& sc) {
  KleisliMap p;
  p.k = p.l = sc.m;
  p.rows = sc.rows;
  return p;
}

std::vector<LocalStrategy> support(const BellScenario& sc, double tol) {
  std::vector<LocalStrategy> out;
  for (const LocalStrategy& g : strategies(sc.m)) {
    bool ok = true;
    for (std::uint32_t i = 0; i < (1u << sc.m) && ok; ++i)
      if (sc.rows[i][g.apply(i)] <= tol) ok = false;
    if (ok) out.push_back(g);
  }
  return out;
}

bool is_strongly_contextual(const BellScenario& sc, double tol) {
  return support(sc, tol).empty();
}

namespace {

// rows: one constraint per (setting, outcome) pair; columns: strategies
template <typename F>
LpResult<F> ncf_lp(const BellScenario& sc, const F& eps,
                   const std::function<F(double)>& lift) {
  auto gs = strategies(sc.m);
  std::uint32_t ni = 1u << sc.m;
  std::vector<std::vector<F>> a(std::size_t(ni) * ni, std::vector<F>(gs.size(), F(0)));
  std::vector<F> b(std::size_t(ni) * ni, F(0));
  for (std::uint32_t i = 0; i < ni; ++i)
    for (std::uint32_t s = 0; s < ni; ++s) {
      std::size_t row = std::size_t(i) * ni + s;
      double p = sc.rows[i][s];
      b[row] = lift(p < 0 ? 0.0 : p);
      for (std::size_t gi = 0; gi < gs.size(); ++gi)
        if (gs[gi].apply(i) == s) a[row][gi] = F(1);
    }
  std::vector<F> c(gs.size(), F(1));
  return simplex_maximize<F>(a, b, c, eps);
}

}  // namespace

double ncf(const BellScenario& sc, bool require_compatibility) {
  if (require_compatibility && !check_compatibility(sc))
    throw validation_error("scenario violates compatibility");
  auto res = ncf_lp<double>(sc, 1e-9, [](double p) { return p; });
  double v = res.optimum;
  return v < 0 ? 0.0 : (v > 1 ? 1.0 : v);
}

Rational ncf_exact(const BellScenario& sc, bool require_compatibility) {
  if (require_compatibility && !check_compatibility(sc))
    throw validation_error("scenario violates compatibility");
  auto res = ncf_lp<Rational>(sc, Rational(0), [](double p) { return rational_from_double(p); });
  return res.optimum;
}

}  // namespace dpgc
