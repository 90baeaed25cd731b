#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace dpgc {

// Exact angle num/den * pi. Kept symbolic so 0, +-pi/4, pi/2 round-trip with
// no representation drift; trig values are computed at use sites.
struct Angle {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Angle() = default;
  Angle(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw validation_error("angle denominator must be nonzero");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    // normalize to [0, 2) turns of pi
    std::int64_t two = 2 * den;
    num %= two;
    if (num < 0) num += two;
  }

  double radians() const { return M_PI * static_cast<double>(num) / static_cast<double>(den); }

  Angle negated() const { return Angle(-num, den); }

  bool operator==(const Angle& o) const { return num == o.num && den == o.den; }
  bool operator<(const Angle& o) const {
    return num * o.den < o.num * den;
  }

  std::string str() const {
    if (num == 0) return "0";
    if (den == 1) return std::to_string(num) + "pi";
    return std::to_string(num) + "pi/" + std::to_string(den);
  }
};

// cos(a) and sin(a) with exact values at the multiples of pi/4 the models use.
inline double cos_angle(const Angle& a) {
  std::int64_t q = 8 * a.num;
  if (q % a.den == 0) {
    switch ((q / a.den) % 16) {  // eighths of pi, in [0,16)
      case 0: return 1.0;
      case 2: case 14: return M_SQRT1_2;
      case 4: case 12: return 0.0;
      case 6: case 10: return -M_SQRT1_2;
      case 8: return -1.0;
      default: break;
    }
  }
  return std::cos(a.radians());
}

inline double sin_angle(const Angle& a) {
  std::int64_t q = 8 * a.num;
  if (q % a.den == 0) {
    switch ((q / a.den) % 16) {
      case 0: case 8: return 0.0;
      case 2: case 6: return M_SQRT1_2;
      case 4: return 1.0;
      case 10: case 14: return -M_SQRT1_2;
      case 12: return -1.0;
      default: break;
    }
  }
  return std::sin(a.radians());
}

}  // namespace dpgc
