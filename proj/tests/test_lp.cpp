#include "doctest.h"
#include "dpgc/lp.hpp"
#include "dpgc/rational.hpp"

using namespace dpgc;

TEST_CASE("simplex solves a textbook LP") {
  // max 3x + 5y st x <= 4, 2y <= 12, 3x + 2y <= 18
  std::vector<std::vector<double>> a = {{1, 0}, {0, 2}, {3, 2}};
  std::vector<double> b = {4, 12, 18};
  std::vector<double> c = {3, 5};
  auto res = simplex_maximize<double>(a, b, c, 1e-9);
  CHECK(res.optimum == doctest::Approx(36.0));
  CHECK(res.solution[0] == doctest::Approx(2.0));
  CHECK(res.solution[1] == doctest::Approx(6.0));
}

TEST_CASE("simplex in exact rationals") {
  std::vector<std::vector<Rational>> a = {{Rational(1), Rational(0)},
                                          {Rational(0), Rational(2)},
                                          {Rational(3), Rational(2)}};
  std::vector<Rational> b = {Rational(4), Rational(12), Rational(18)};
  std::vector<Rational> c = {Rational(3), Rational(5)};
  auto res = simplex_maximize<Rational>(a, b, c, Rational(0));
  CHECK(res.optimum == Rational(36));

  // a fractional optimum is exact
  std::vector<std::vector<Rational>> a2 = {{Rational(3)}, {Rational(2)}};
  std::vector<Rational> b2 = {Rational(1), Rational(1)};
  std::vector<Rational> c2 = {Rational(1)};
  auto res2 = simplex_maximize<Rational>(a2, b2, c2, Rational(0));
  CHECK(res2.optimum == Rational(1, 3));
}

TEST_CASE("degenerate LPs terminate with Bland's rule") {
  // redundant constraints and a tight one through the origin
  std::vector<std::vector<double>> a = {{1, 1}, {1, 1}, {1, 1}, {1, -1}, {0, 1}};
  std::vector<double> b = {1, 1, 1, 0, 0.5};
  std::vector<double> c = {1, 1};
  auto res = simplex_maximize<double>(a, b, c, 1e-9);
  CHECK(res.optimum == doctest::Approx(1.0));
}

TEST_CASE("unbounded and malformed programs are reported") {
  std::vector<std::vector<double>> a = {{-1.0}};
  std::vector<double> b = {1};
  std::vector<double> c = {1};
  CHECK_THROWS_AS(simplex_maximize<double>(a, b, c, 1e-9), validation_error);
  std::vector<double> bad_b = {-1};
  std::vector<std::vector<double>> a2 = {{1.0}};
  CHECK_THROWS_AS(simplex_maximize<double>(a2, bad_b, c, 1e-9), validation_error);
}

TEST_CASE("doubles convert to exact rationals") {
  CHECK(rational_from_double(0.25) == Rational(1, 4));
  CHECK(rational_from_double(0.1) != Rational(1, 10));  // 0.1 is not dyadic
  CHECK(rational_from_double(0.0) == Rational(0));
  CHECK(rational_from_double(1.0) == Rational(1));
  CHECK(rational_to_string(Rational(3, 8)) == "3/8");
  CHECK(rational_to_string(Rational(2)) == "2");
}
