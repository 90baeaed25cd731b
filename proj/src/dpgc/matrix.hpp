#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "angle.hpp"
#include "errors.hpp"

namespace dpgc {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline std::int64_t pow2(int n) { return std::int64_t(1) << n; }

// Single-qubit / two-qubit gate constants. S = T^2, E = controlled-Z.
Mat gate(const std::string& name);

Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

// |+_alpha^r><+_alpha^r| = (1 + (-1)^r (cos a X + sin a Y)) / 2
Mat projector_alpha(const Angle& alpha, int r);
// |r><r| = (1 + (-1)^r Z) / 2
Mat projector_z(int r);
// S^s Pi_X^r S^-s: the X measurement twisted into Y when s = 1
Mat projector_xs(int s, int r);

// Uniform front API matching the three projector kinds.
Mat projector(const std::string& kind, const Angle& alpha, int param_bit, int r);

double max_abs(const Mat& a);
double max_abs_diff(const Mat& a, const Mat& b);

bool is_hermitian(const Mat& a, double tol);
double min_eigenvalue(const Mat& hermitian);

struct DensityMatrix {
  int qubits = 0;
  Mat rho;
};

// Validates hermiticity (1e-10), unit trace (1e-10) and spectrum >= -1e-9.
DensityMatrix make_density(int qubits, Mat rho);
DensityMatrix ghz_density(int n);
DensityMatrix zero_density(int n);
DensityMatrix max_mixed_density(int n);

// <op> on a state, Tr(rho * op)
double expectation(const DensityMatrix& rho, const Mat& op);

Mat kron(const Mat& a, const Mat& b);

// n-fold Kronecker product of single-qubit operators, slot 1 most significant
Mat kron_all(const std::vector<Mat>& ops);

}  // namespace dpgc
