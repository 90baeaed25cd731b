#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cpmap.hpp"

namespace dpgc {

// Probability distribution over l-bit strings, indexed big-endian
// (first bit most significant).
using Distribution = std::vector<double>;

// Kleisli map Z_2^k -> D(Z_2^l): one distribution per input string.
struct KleisliMap {
  int k = 0, l = 0;
  std::vector<Distribution> rows;  // size 2^k, each of size 2^l
};

// Finite table (input a, output b) -> CP map; absent entries are the zero
// map. For every a the sum over b must be trace-preserving.
struct AdaptiveInstrument {
  int k = 0, l = 0;  // classical input/output bits
  int m = 0, n = 0;  // qubit input/output counts
  std::map<std::pair<std::uint32_t, std::uint32_t>, CPMap> table;

  const CPMap* entry(std::uint32_t a, std::uint32_t b) const {
    auto it = table.find({a, b});
    return it == table.end() ? nullptr : &it->second;
  }
  void add(std::uint32_t a, std::uint32_t b, CPMap phi);

  // channel condition: every entry CP, every input row sums to a channel
  bool is_valid(double tol = 1e-9) const;
};

// (Psi o Phi)_{(a1,a2)}^{(b1,b2)} = Psi o Phi entrywise; bits concatenate with
// the left factor's bits in front. pre: phi.n == psi.m.
AdaptiveInstrument compose_h(const AdaptiveInstrument& phi, const AdaptiveInstrument& psi);

// (bottom . top)_a^c = sum_b top_a^b (x) bottom_b^c with top's qubits in the
// leading tensor slots. pre: top.l == bottom.k.
AdaptiveInstrument compose_v(const AdaptiveInstrument& top, const AdaptiveInstrument& bottom);

AdaptiveInstrument id_h(int m);
AdaptiveInstrument id_v(int k);

// side-by-side monoidal product: qubits and bits both concatenate, a's slots
// leading; entrywise tensor of the CP maps
AdaptiveInstrument parallel(const AdaptiveInstrument& a, const AdaptiveInstrument& b);

// projections to the two monoidal categories
KleisliMap kleisli(const AdaptiveInstrument& phi);     // needs m == n == 0
CPMap channel(const AdaptiveInstrument& phi);          // needs k == l == 0

// p(b) = Tr(Phi^b(rho)); needs phi.k == 0 and phi.n == 0
Distribution born(const DensityMatrix& rho, const AdaptiveInstrument& phi);
// same with the classical input fixed to a
Distribution born_at(const DensityMatrix& rho, const AdaptiveInstrument& phi, std::uint32_t a);

bool instrument_equal(const AdaptiveInstrument& a, const AdaptiveInstrument& b, double tol);
double instrument_distance(const AdaptiveInstrument& a, const AdaptiveInstrument& b);

}  // namespace dpgc
