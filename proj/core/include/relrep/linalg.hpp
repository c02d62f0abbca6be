#pragma once

#include <Eigen/Dense>
#include <complex>

namespace relrep {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

/// exp(h) for Hermitian h, via eigendecomposition (exact up to rounding,
/// no series truncation).
Matrix exp_hermitian(const Matrix& h);

/// exp(-i t h) for Hermitian h; unitary by construction.
Matrix exp_i_hermitian(const Matrix& h, double t);

/// Largest absolute entry; convenient residual norm.
double max_abs(const Matrix& m);

}  // namespace relrep
