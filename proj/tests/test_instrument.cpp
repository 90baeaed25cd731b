#include <random>

#include "doctest.h"
#include "dpgc/instrument.hpp"
#include "dpgc/semantics.hpp"

using namespace dpgc;

namespace {

std::mt19937_64 rng(4242);

Mat random_matrix(int rows, int cols) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

// random valid instrument: per input a, a random channel split across outputs
AdaptiveInstrument random_instrument(int k, int l, int m, int n) {
  AdaptiveInstrument out;
  out.k = k;
  out.l = l;
  out.m = m;
  out.n = n;
  std::int64_t din = pow2(m), dout = pow2(n);
  int nb = 1 << l;
  for (std::uint32_t a = 0; a < (1u << k); ++a) {
    std::vector<Mat> kraus;
    for (int b = 0; b < nb; ++b) kraus.push_back(random_matrix(int(dout), int(din)));
    Mat s = Mat::Zero(din, din);
    for (const Mat& kr : kraus) s += kr.adjoint() * kr;
    Eigen::SelfAdjointEigenSolver<Mat> es(s);
    Mat isqrt = es.operatorInverseSqrt();
    for (std::uint32_t b = 0; b < std::uint32_t(nb); ++b)
      out.add(a, b, cp_from_conjugation(kraus[b] * isqrt));
  }
  return out;
}

AdaptiveInstrument boolean(const std::string& name) { return label_instrument(make_label(name)); }

}  // namespace

TEST_CASE("channel condition holds for random instruments") {
  for (int t = 0; t < 5; ++t) CHECK(random_instrument(1, 1, 1, 1).is_valid(1e-8));
}

TEST_CASE("identity squares") {
  CHECK(instrument_equal(id_h(0), id_v(0), 0.0));  // Id_*^v = Id_C^h
  CHECK(instrument_equal(compose_v(id_v(2), id_v(2)), id_v(2), 0.0));
  const CPMap* e = id_h(1).entry(0, 0);
  REQUIRE(e != nullptr);
  CHECK(max_abs_diff(e->sop, Mat::Identity(4, 4)) == 0.0);
}

TEST_CASE("horizontal composition") {
  AdaptiveInstrument hchan, tchan;
  hchan.m = hchan.n = 1;
  hchan.add(0, 0, cp_from_conjugation(gate("H")));
  tchan.m = tchan.n = 1;
  tchan.add(0, 0, cp_from_conjugation(gate("T")));

  AdaptiveInstrument ht = compose_h(hchan, tchan);
  CHECK(max_abs_diff(channel(ht).sop, cp_from_conjugation(gate("T") * gate("H")).sop) < 1e-12);

  AdaptiveInstrument phi = random_instrument(1, 1, 1, 1);
  CHECK(instrument_equal(compose_h(phi, id_h(1)), phi, 1e-12));
  CHECK(instrument_equal(compose_h(id_h(1), phi), phi, 1e-12));
  CHECK(compose_h(phi, random_instrument(1, 1, 1, 2)).is_valid(1e-8));
  CHECK_THROWS_AS(compose_h(phi, random_instrument(0, 0, 2, 2)), validation_error);
}

TEST_CASE("vertical composition") {
  AdaptiveInstrument phi = random_instrument(1, 1, 1, 1);
  CHECK(instrument_equal(compose_v(id_v(1), phi), phi, 1e-12));
  CHECK(instrument_equal(compose_v(phi, id_v(1)), phi, 1e-12));
  CHECK(compose_v(phi, random_instrument(1, 2, 1, 1)).is_valid(1e-8));
  CHECK_THROWS_AS(compose_v(phi, random_instrument(2, 1, 1, 1)), validation_error);

  // copy then xor computes r xor r = 0
  AdaptiveInstrument both = compose_v(boolean("c"), boolean("xor"));
  KleisliMap km = kleisli(both);
  for (int r = 0; r < 2; ++r) {
    CHECK(km.rows[r][0] == doctest::Approx(1.0));
    CHECK(km.rows[r][1] == doctest::Approx(0.0));
  }
}

TEST_CASE("vertical composition of boolean instruments is function composition") {
  // not . xor: (s,r) -> !(s^r)
  AdaptiveInstrument nx = compose_v(boolean("xor"), boolean("not"));
  KleisliMap km = kleisli(nx);
  for (std::uint32_t a = 0; a < 4; ++a) {
    std::uint32_t expect = ((a ^ (a >> 1)) & 1u) ^ 1u;
    CHECK(km.rows[a][expect] == doctest::Approx(1.0));
  }
}

TEST_CASE("interchange law on random grids") {
  for (int t = 0; t < 30; ++t) {
    int x1 = t % 2, x2 = (t / 2) % 2, y1 = 1, y2 = t % 2, z1 = (t + 1) % 2, z2 = 1;
    int v1 = 1, w1 = t % 2 + 1, u1 = 1, v2 = 1, w2 = 1, u2 = t % 2;
    AdaptiveInstrument p11 = random_instrument(x1, y1, v1, w1);
    AdaptiveInstrument p12 = random_instrument(x2, y2, w1, u1);
    AdaptiveInstrument p21 = random_instrument(y1, z1, v2, w2);
    AdaptiveInstrument p22 = random_instrument(y2, z2, w2, u2);
    AdaptiveInstrument lhs = compose_v(compose_h(p11, p12), compose_h(p21, p22));
    AdaptiveInstrument rhs = compose_h(compose_v(p11, p21), compose_v(p12, p22));
    CHECK(instrument_distance(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("associativity of both compositions") {
  for (int t = 0; t < 10; ++t) {
    AdaptiveInstrument a = random_instrument(1, 1, 1, 1);
    AdaptiveInstrument b = random_instrument(1, 1, 1, 2);
    AdaptiveInstrument c = random_instrument(1, 1, 2, 1);
    CHECK(instrument_distance(compose_h(compose_h(a, b), c), compose_h(a, compose_h(b, c))) < 1e-10);

    AdaptiveInstrument x = random_instrument(1, 2, 1, 1);
    AdaptiveInstrument y = random_instrument(2, 1, 1, 1);
    AdaptiveInstrument z = random_instrument(1, 1, 1, 1);
    CHECK(instrument_distance(compose_v(compose_v(x, y), z), compose_v(x, compose_v(y, z))) < 1e-10);
  }
}

TEST_CASE("kleisli projections of the boolean instruments") {
  KleisliMap km = kleisli(boolean("xor"));
  CHECK(km.rows[3][0] == doctest::Approx(1.0));  // (1,1) -> 0

  KleisliMap orr = kleisli(boolean("or"));
  CHECK(orr.rows[2][1] == doctest::Approx(1.0));  // (1,0) -> 1

  CHECK_THROWS_AS(kleisli(random_instrument(1, 1, 1, 1)), validation_error);
}

TEST_CASE("channel projection") {
  AdaptiveInstrument u;
  u.m = u.n = 1;
  u.add(0, 0, cp_from_conjugation(gate("H")));
  CHECK(max_abs_diff(channel(u).sop, cp_from_conjugation(gate("H")).sop) == 0.0);
  CHECK_THROWS_AS(channel(boolean("xor")), validation_error);
}

TEST_CASE("born rule") {
  AdaptiveInstrument mz = label_instrument(make_label("MZ"));
  Distribution d0 = born(zero_density(1), mz);
  CHECK(d0[0] == doctest::Approx(1.0));
  CHECK(d0[1] == doctest::Approx(0.0));

  Distribution dplus = born(ghz_density(1), mz);  // |+><+|
  CHECK(dplus[0] == doctest::Approx(0.5));
  CHECK(dplus[1] == doctest::Approx(0.5));

  // triple X measurement of GHZ(3): uniform over even parity outcomes
  AdaptiveInstrument mx = label_instrument(make_label("MX"));
  AdaptiveInstrument mxxx = parallel(parallel(mx, mx), mx);
  Distribution g = born(ghz_density(3), mxxx);
  for (std::uint32_t b = 0; b < 8; ++b) {
    int parity = __builtin_popcount(b) & 1;
    CHECK(g[b] == doctest::Approx(parity ? 0.0 : 0.25));
  }

  CHECK_THROWS_AS(born(ghz_density(2), mz), validation_error);

  // born sums to 1 for every fixed input of an adaptive instrument
  AdaptiveInstrument phi = random_instrument(2, 2, 1, 0);
  for (std::uint32_t a = 0; a < 4; ++a) {
    Distribution d = born_at(ghz_density(1), phi, a);
    double s = 0;
    for (double p : d) s += p;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("instrument equality") {
  AdaptiveInstrument h;
  h.m = h.n = 1;
  h.add(0, 0, cp_from_conjugation(gate("H")));
  AdaptiveInstrument t;
  t.m = t.n = 1;
  t.add(0, 0, cp_from_conjugation(gate("T")));
  CHECK(instrument_equal(h, h, 0.0));
  CHECK_FALSE(instrument_equal(h, t, 1e-9));
  CHECK_THROWS_AS(instrument_equal(h, boolean("xor"), 1e-9), validation_error);
}
