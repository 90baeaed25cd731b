#pragma once

#include <vector>

#include "matrix.hpp"

namespace dpgc {

// Completely positive map between qubit spaces, stored as a superoperator on
// column-stacked vectorizations: vec(X)[c*d + r] = X(r, c), and X -> A X B has
// superoperator B^T (x) A. Qubit counts of 0 mean the scalar space C.
struct CPMap {
  int in_qubits = 0;
  int out_qubits = 0;
  Mat sop;  // (4^out) x (4^in)

  std::int64_t din() const { return pow2(in_qubits); }
  std::int64_t dout() const { return pow2(out_qubits); }
};

CPMap cp_identity(int qubits);
CPMap cp_zero(int in_qubits, int out_qubits);

// X -> A X A^dagger; A may be rectangular (dout x din), dims must be powers of 2.
CPMap cp_from_conjugation(const Mat& a);
CPMap cp_from_kraus(const std::vector<Mat>& kraus);

// after o before
CPMap compose_cp(const CPMap& after, const CPMap& before);
// a (x) b with a's qubits in the most significant slots
CPMap tensor_cp(const CPMap& a, const CPMap& b);
CPMap add_cp(const CPMap& a, const CPMap& b);
CPMap scale_cp(const CPMap& a, double factor);

Mat apply_cp(const CPMap& phi, const Mat& x);

// L((C^2)^m) -> L(C), X -> Tr(X)
CPMap trace_cp(int m);
// the scalar map c >= 0 on L(C)
CPMap scalar_cp(double c);

// Choi matrix sum_ij E_ij (x) Phi(E_ij), a (din*dout)^2 square matrix.
Mat choi(const CPMap& phi);
bool is_cp(const CPMap& phi, double tol = 1e-9);
bool is_tp(const CPMap& phi, double tol = 1e-9);

// Conjugation by the wire permutation unitary on m qubits: output slot j
// carries what input slot perm[j-1] carried (perm is 1-based content).
CPMap permute_wires(const std::vector<int>& perm, int m);

double max_abs_diff_cp(const CPMap& a, const CPMap& b);

}  // namespace dpgc
