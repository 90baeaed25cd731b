#pragma once

#include <cstdint>
#include <vector>

#include "instrument.hpp"
#include "rational.hpp"

namespace dpgc {

// h(x) = constant + A x over Z_2, bits big-endian (bit 1 most significant)
struct AffineMap {
  int in_bits = 0, out_bits = 0;
  std::vector<std::uint32_t> rows;  // per output bit, a mask over the inputs
  std::uint32_t constant = 0;

  std::uint32_t apply(std::uint32_t x) const;
  static AffineMap identity(int m);
};

// total function Z_2^in -> Z_2^out as a table of 2^in values
struct TruthTable {
  int in_bits = 0, out_bits = 0;
  std::vector<std::uint32_t> values;
};

TruthTable table_of(const AffineMap& h);
TruthTable or_table();
TruthTable and_table();

bool is_affine(const TruthTable& f);

// average distance to the closest affine Boolean function, by brute force
// over all 2^{out*(in+1)} affine maps
Rational nu(const TruthTable& f);

// average success probability (1/2^m) sum_r p_r(f(r))
double p_succ(const KleisliMap& p, const TruthTable& f);

}  // namespace dpgc
