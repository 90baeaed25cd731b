#include <random>

#include "doctest.h"
#include "dpgc/bellspec.hpp"

using namespace dpgc;

namespace {

std::mt19937_64 rng(60902);

BellScenario mermin_scenario() {
  return scenario_from(ghz_density(3), BellInstrumentSpec::plain_xy(3));
}

BellScenario pr_box() {
  // perfect correlation except anti-correlation at settings (1,1)
  BellScenario sc;
  sc.m = 2;
  sc.rows.assign(4, std::vector<double>(4, 0.0));
  for (std::uint32_t i = 0; i < 4; ++i) {
    if (i == 3) {
      sc.rows[i][1] = sc.rows[i][2] = 0.5;
    } else {
      sc.rows[i][0] = sc.rows[i][3] = 0.5;
    }
  }
  return sc;
}

std::vector<double> random_weights(int m) {
  std::vector<double> w(std::size_t(1) << (2 * m));
  double s = 0;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double& x : w) {
    x = u(rng);
    s += x;
  }
  for (double& x : w) x /= s;
  // renormalize exactly enough for the 1e-9 gate
  double total = 0;
  for (double x : w) total += x;
  w[0] += 1.0 - total;
  return w;
}

DensityMatrix random_density(int qubits) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::int64_t d = pow2(qubits);
  Mat a(d, d);
  for (std::int64_t i = 0; i < d; ++i)
    for (std::int64_t j = 0; j < d; ++j) a(i, j) = Complex(dist(rng), dist(rng));
  Mat rho = a * a.adjoint();
  rho /= rho.trace();
  return make_density(qubits, 0.5 * (rho + rho.adjoint()));
}

BellInstrumentSpec random_spec(int m, bool adaptive) {
  BellInstrumentSpec spec;
  spec.m = m;
  for (int j = 1; j <= m; ++j) {
    spec.bases.push_back(rng() % 4 == 0 ? "z" : "xy");
    AdaptiveTerm at;
    at.constant = int(rng() % 2);
    if (adaptive)
      for (int t = 1; t < j; ++t)
        if (rng() % 2) at.outcomes.push_back(t);
    spec.adaptivity.push_back(at);
  }
  return spec;
}

AffineMap random_affine(int in_bits, int out_bits) {
  AffineMap h;
  h.in_bits = in_bits;
  h.out_bits = out_bits;
  for (int o = 0; o < out_bits; ++o) h.rows.push_back(std::uint32_t(rng() % (1u << in_bits)));
  h.constant = std::uint32_t(rng() % (1u << out_bits));
  return h;
}

TruthTable random_table(int in_bits, int out_bits) {
  TruthTable t;
  t.in_bits = in_bits;
  t.out_bits = out_bits;
  for (std::uint32_t x = 0; x < (1u << in_bits); ++x)
    t.values.push_back(std::uint32_t(rng() % (1u << out_bits)));
  return t;
}

}  // namespace

TEST_CASE("sphere simplex faces") {
  SphereSimplex s{3, 0b101};
  // forgetting the last party is independent of its bit
  SphereSimplex a{3, 0b100}, b{3, 0b101};
  CHECK(a.face(3).bits == b.face(3).bits);
  CHECK(a.face(3).m == 2);
  CHECK(s.face(1).bits == 0b01);
  CHECK(s.face(2).bits == 0b11);
  CHECK(s.bit(1) == 1);
  CHECK(s.bit(2) == 0);
  CHECK(s.bit(3) == 1);
  CHECK_THROWS_AS(s.face(4), validation_error);
}

TEST_CASE("single qubit scenarios") {
  // |+> with the X/Y family: X setting gives delta_0, Y is uniform
  BellScenario sc = scenario_from(ghz_density(1), BellInstrumentSpec::plain_xy(1));
  CHECK(sc.rows[0][0] == doctest::Approx(1.0));
  CHECK(sc.rows[0][1] == doctest::Approx(0.0));
  CHECK(sc.rows[1][0] == doctest::Approx(0.5));
  CHECK(sc.rows[1][1] == doctest::Approx(0.5));
}

TEST_CASE("product states with setting-independent instruments are deterministic") {
  BellInstrumentSpec spec;
  spec.m = 2;
  spec.bases = {"z", "z"};
  spec.adaptivity.assign(2, AdaptiveTerm{});
  BellScenario sc = scenario_from(zero_density(2), spec);
  for (std::uint32_t i = 0; i < 4; ++i) CHECK(sc.rows[i][0] == doctest::Approx(1.0));
}

TEST_CASE("the Mermin table") {
  BellScenario sc = mermin_scenario();
  CHECK(check_compatibility(sc));
  // contexts with an even number of Y settings are parity-deterministic
  auto parity_expectation = [&](std::uint32_t i) {
    double e = 0;
    for (std::uint32_t s = 0; s < 8; ++s)
      e += sc.rows[i][s] * ((__builtin_popcount(s) & 1) ? -1.0 : 1.0);
    return e;
  };
  CHECK(parity_expectation(0b000) == doctest::Approx(1.0));   // XXX
  CHECK(parity_expectation(0b011) == doctest::Approx(-1.0));  // XYY
  CHECK(parity_expectation(0b101) == doctest::Approx(-1.0));  // YXY
  CHECK(parity_expectation(0b110) == doctest::Approx(-1.0));  // YYX
}

TEST_CASE("hand-built signaling tables are rejected") {
  BellScenario sc;
  sc.m = 2;
  sc.rows.assign(4, std::vector<double>(4, 0.0));
  // party 1's marginal depends on party 2's setting
  sc.rows[0][0] = 1.0;
  sc.rows[1][3] = 1.0;
  sc.rows[2][0] = 1.0;
  sc.rows[3][3] = 1.0;
  CHECK_FALSE(check_compatibility(sc));
  CHECK_THROWS_AS(ncf(sc), validation_error);
}

TEST_CASE("strategies") {
  CHECK(strategies(2).size() == 16);
  // identity strategy reproduces its settings
  LocalStrategy ident{2, 0b1010};  // g_j(0)=0, g_j(1)=1 for both parties
  BellScenario sc = strategy_scenario(ident);
  for (std::uint32_t i = 0; i < 4; ++i) CHECK(sc.rows[i][i] == doctest::Approx(1.0));
  CHECK(check_compatibility(sc));

  // uniform mixture gives uniform rows
  int m = 2;
  std::vector<double> w(16, 1.0 / 16.0);
  BellScenario mix = strategy_mixture(m, w);
  for (auto& row : mix.rows)
    for (double p : row) CHECK(p == doctest::Approx(0.25));

  // every deterministic strategy's Kleisli map is affine with per-party bits
  for (const LocalStrategy& g : strategies(2)) {
    TruthTable t{2, 2, {}};
    for (std::uint32_t i = 0; i < 4; ++i) t.values.push_back(g.apply(i));
    CHECK(is_affine(t));
  }
}

TEST_CASE("support and strong contextuality") {
  LocalStrategy g{2, 0b0110};
  BellScenario det = strategy_scenario(g);
  auto sup = support(det);
  CHECK(!sup.empty());
  bool found = false;
  for (const auto& s : sup)
    if (s.code == g.code) found = true;
  CHECK(found);

  BellScenario uni = strategy_mixture(2, std::vector<double>(16, 1.0 / 16.0));
  CHECK(support(uni).size() == 16);

  CHECK(support(mermin_scenario()).empty());
  CHECK(is_strongly_contextual(mermin_scenario()));
}

TEST_CASE("ncf of the canonical scenarios") {
  // strategy mixtures are entirely noncontextual
  for (int trial = 0; trial < 5; ++trial) {
    BellScenario mix = strategy_mixture(2, random_weights(2));
    CHECK(ncf(mix) == doctest::Approx(1.0).epsilon(1e-7));
  }
  // GHZ/Mermin is strongly contextual: exact zero in the rational LP
  CHECK(ncf_exact(mermin_scenario()) == Rational(0));
  CHECK(ncf(mermin_scenario()) == doctest::Approx(0.0).epsilon(1e-9));
  // the PR box too
  CHECK(ncf_exact(pr_box()) == Rational(0));
}

TEST_CASE("ncf is monotone under mixing with a noncontextual scenario") {
  BellScenario q = mermin_scenario();
  BellScenario nc = strategy_mixture(3, random_weights(3));
  for (double lam : {0.25, 0.5, 0.75}) {
    BellScenario mixed;
    mixed.m = 3;
    for (std::size_t i = 0; i < q.rows.size(); ++i) {
      std::vector<double> row(q.rows[i].size());
      for (std::size_t s = 0; s < row.size(); ++s)
        row[s] = lam * nc.rows[i][s] + (1 - lam) * q.rows[i][s];
      mixed.rows.push_back(row);
    }
    double v = ncf(mixed);
    CHECK(v >= lam + (1 - lam) * ncf(q) - 1e-7);
  }
}

TEST_CASE("strong contextuality iff zero ncf on a random corpus") {
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    BellScenario sc;
    int kind = trial % 3;
    int m = 1 + int(rng() % 3);
    if (kind == 0) {
      sc = strategy_mixture(m, random_weights(m));
    } else if (kind == 1) {
      sc = scenario_from(random_density(m), random_spec(m, false));
    } else {
      BellScenario a = strategy_mixture(m, random_weights(m));
      BellScenario b = scenario_from(random_density(m), random_spec(m, false));
      sc.m = m;
      for (std::size_t i = 0; i < a.rows.size(); ++i) {
        std::vector<double> row(a.rows[i].size());
        for (std::size_t s = 0; s < row.size(); ++s)
          row[s] = 0.5 * a.rows[i][s] + 0.5 * b.rows[i][s];
        sc.rows.push_back(row);
      }
    }
    REQUIRE(check_compatibility(sc));
    bool strong = is_strongly_contextual(sc, 1e-9);
    double v = ncf(sc);
    CHECK(strong == (v <= 1e-7));
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("nu by brute force") {
  CHECK(nu(or_table()) == Rational(1, 4));
  CHECK(nu(and_table()) == Rational(1, 4));
  AffineMap h = random_affine(3, 2);
  CHECK(nu(table_of(h)) == Rational(0));
  CHECK(is_affine(table_of(h)));
  CHECK_FALSE(is_affine(or_table()));
}

TEST_CASE("p_succ") {
  // a Kleisli map equal to delta_f succeeds with probability 1
  TruthTable f = or_table();
  KleisliMap p;
  p.k = 2;
  p.l = 1;
  for (std::uint32_t r = 0; r < 4; ++r) {
    std::vector<double> row(2, 0.0);
    row[f.values[r]] = 1.0;
    p.rows.push_back(row);
  }
  CHECK(p_succ(p, f) == doctest::Approx(1.0));

  KleisliMap uniform;
  uniform.k = 2;
  uniform.l = 1;
  uniform.rows.assign(4, {0.5, 0.5});
  CHECK(p_succ(uniform, f) == doctest::Approx(0.5));

  KleisliMap wrong;
  wrong.k = 1;
  wrong.l = 1;
  wrong.rows.assign(2, {1.0, 0.0});
  CHECK_THROWS_AS(p_succ(wrong, f), validation_error);
}

TEST_CASE("bound_check on the canonical instances") {
  // the OR-gadget pipeline: GHZ(3), X/Y instruments, settings (a, b, a^b)
  AffineMap tau;
  tau.in_bits = 2;
  tau.out_bits = 3;
  tau.rows = {0b10, 0b01, 0b11};
  tau.constant = 0;
  AffineMap parity;
  parity.in_bits = 3;
  parity.out_bits = 1;
  parity.rows = {0b111};
  parity.constant = 0;

  // outcome parity computes OR exactly; the bound is tight: 1 <= 1 - 0
  BoundReport orrep = bound_check(ghz_density(3), BellInstrumentSpec::plain_xy(3), parity,
                                  or_table(), tau, true);
  CHECK(orrep.lhs == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(orrep.ncf_value == doctest::Approx(0.0));
  CHECK(orrep.rhs == doctest::Approx(1.0));
  CHECK(orrep.nu_value == Rational(1, 4));
  CHECK(orrep.holds);

  // with the drawn NOT the pipeline computes NOR, also deterministic non-affine
  AffineMap parity_not = parity;
  parity_not.constant = 1;
  TruthTable nor{2, 1, {1, 0, 0, 0}};
  BoundReport norrep = bound_check(ghz_density(3), BellInstrumentSpec::plain_xy(3), parity_not,
                                   nor, tau, true);
  CHECK(norrep.lhs == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(norrep.holds);

  // maximally mixed state: success probability 1/2, ncf 1, rhs 3/4
  BoundReport mixed = bound_check(max_mixed_density(3), BellInstrumentSpec::plain_xy(3), parity,
                                  or_table(), tau, false);
  CHECK(mixed.lhs == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(mixed.ncf_value == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(mixed.rhs == doctest::Approx(0.75).epsilon(1e-7));
  CHECK(mixed.holds);

  // affine targets make the bound vacuous
  AffineMap h = random_affine(3, 1);
  TruthTable f_affine = table_of(random_affine(3, 1));
  BoundReport vac = bound_check(random_density(3), BellInstrumentSpec::plain_xy(3), h, f_affine,
                                AffineMap::identity(3), false);
  CHECK(vac.rhs == doctest::Approx(1.0));
  CHECK(vac.holds);
}

TEST_CASE("adaptive feeds can break strict face compatibility") {
  // the counterexample: qubit 2 measures in the basis selected by qubit 1's
  // outcome; summing out s1, qubit 2's statistics depend on qubit 1's setting
  BellInstrumentSpec spec;
  spec.m = 2;
  spec.bases = {"xy", "xy"};
  spec.adaptivity = {AdaptiveTerm{}, AdaptiveTerm{0, {1}}};
  DensityMatrix plusplus = make_density(
      2, kron(ghz_density(1).rho, ghz_density(1).rho));
  CHECK_THROWS_AS(scenario_from(plusplus, spec), validation_error);
  BellScenario sc = scenario_from(plusplus, spec, false);
  CHECK_FALSE(check_compatibility(sc));
  // the computational-power bound is still valid on such scenarios
  AffineMap h = AffineMap::identity(2);
  BoundReport rep = bound_check(plusplus, spec, h, table_of(h), AffineMap::identity(2), false);
  CHECK_FALSE(rep.compatible);
  CHECK(rep.holds);
}

TEST_CASE("the bound holds on randomized instances") {
  for (int trial = 0; trial < 40; ++trial) {
    int m = 1 + int(rng() % 3);
    DensityMatrix rho = random_density(m);
    BellInstrumentSpec spec = random_spec(m, true);
    int lbits = 1 + int(rng() % 2);
    AffineMap h = random_affine(m, lbits);
    TruthTable f = random_table(m, lbits);
    BoundReport rep = bound_check(rho, spec, h, f, AffineMap::identity(m), false);
    CHECK(rep.holds);
  }
}
