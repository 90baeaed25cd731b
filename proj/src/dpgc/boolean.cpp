#include "boolean.hpp"

#include <bit>

namespace dpgc {

std::uint32_t AffineMap::apply(std::uint32_t x) const {
  std::uint32_t out = constant;
  for (int o = 0; o < out_bits; ++o) {
    int parity = std::popcount(rows[o] & x) & 1;
    if (parity) out ^= (1u << (out_bits - 1 - o));
  }
  return out;
}

AffineMap AffineMap::identity(int m) {
  AffineMap h;
  h.in_bits = h.out_bits = m;
  for (int o = 0; o < m; ++o) h.rows.push_back(1u << (m - 1 - o));
  return h;
}

TruthTable table_of(const AffineMap& h) {
  TruthTable t;
  t.in_bits = h.in_bits;
  t.out_bits = h.out_bits;
  for (std::uint32_t x = 0; x < (1u << h.in_bits); ++x) t.values.push_back(h.apply(x));
  return t;
}

TruthTable or_table() { return TruthTable{2, 1, {0, 1, 1, 1}}; }
TruthTable and_table() { return TruthTable{2, 1, {0, 0, 0, 1}}; }

namespace {

template <typename Fn>
void for_each_affine(int in_bits, int out_bits, Fn&& fn) {
  std::uint64_t row_space = 1ull << in_bits;
  std::uint64_t const_space = 1ull << out_bits;
  // enumerate each output row mask and the constant independently
  std::vector<std::uint32_t> rows(out_bits, 0);
  std::uint64_t total = 1;
  for (int o = 0; o < out_bits; ++o) total *= row_space;
  for (std::uint64_t r = 0; r < total; ++r) {
    std::uint64_t acc = r;
    for (int o = 0; o < out_bits; ++o) {
      rows[o] = std::uint32_t(acc % row_space);
      acc /= row_space;
    }
    for (std::uint64_t c = 0; c < const_space; ++c) {
      AffineMap h;
      h.in_bits = in_bits;
      h.out_bits = out_bits;
      h.rows = rows;
      h.constant = std::uint32_t(c);
      fn(h);
    }
  }
}

}  // namespace

bool is_affine(const TruthTable& f) {
  bool found = false;
  for_each_affine(f.in_bits, f.out_bits, [&](const AffineMap& h) {
    if (found) return;
    for (std::uint32_t x = 0; x < (1u << f.in_bits); ++x)
      if (h.apply(x) != f.values[x]) return;
    found = true;
  });
  return found;
}

Rational nu(const TruthTable& f) {
  if (f.in_bits > 16 || std::uint64_t(f.out_bits) * (f.in_bits + 1) > 24)
    throw validation_error("nu brute force limited to small functions");
  std::uint32_t best = 1u << f.in_bits;
  for_each_affine(f.in_bits, f.out_bits, [&](const AffineMap& h) {
    std::uint32_t diff = 0;
    for (std::uint32_t x = 0; x < (1u << f.in_bits); ++x)
      if (h.apply(x) != f.values[x]) ++diff;
    if (diff < best) best = diff;
  });
  return Rational(best) / Rational(1u << f.in_bits);
}

double p_succ(const KleisliMap& p, const TruthTable& f) {
  if (p.k != f.in_bits || p.l != f.out_bits)
    throw validation_error("p_succ arity mismatch");
  double total = 0;
  for (std::uint32_t r = 0; r < (1u << p.k); ++r) total += p.rows[r][f.values[r]];
  return total / double(1u << p.k);
}

}  // namespace dpgc
