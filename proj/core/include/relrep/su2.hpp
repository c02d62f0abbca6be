#pragma once

#include <vector>

#include "relrep/half_int.hpp"
#include "relrep/linalg.hpp"

namespace relrep {

/// Angular momentum matrices for spin j on the basis sigma = j, j-1, ..., -j
/// (descending; this ordering is used for every sigma-indexed object in the
/// library):
///
///   (jz)_{s's} = s delta_{s's}
///   (j+-)_{s's} = delta_{s', s+-1} sqrt((j -+ s)(j +- s + 1))
struct SpinMatrices {
  HalfInt j;
  Matrix jz, jplus, jminus;

  Matrix j1() const { return 0.5 * (jplus + jminus); }
  Matrix j2() const { return Complex(0, -0.5) * (jplus - jminus); }
  const Matrix& j3() const { return jz; }
};

/// Dimension 2j+1; throws for negative j.
SpinMatrices spin_matrices(HalfInt j);

/// Row/column index of weight sigma in the descending basis for spin j.
int weight_index(HalfInt j, HalfInt sigma);

/// Decomposition u = s * exp(-i phi n.sigma/2) of an SU(2) matrix with
/// s in {+1,-1}, phi in [0, pi], |n| = 1.  The sign s soaks up the branch
/// so phi never exceeds pi (robust near u = -1).
struct Su2AxisAngle {
  int s;
  double phi;
  double axis[3];
};

/// Requires u unitary and det u = 1 within tol.
Su2AxisAngle su2_axis_angle(const Matrix2& u, double tol = 1e-8);

/// Spin-j representation matrix D^(j)(u) = s^(2j) exp(-i phi n.J).
/// D^(1/2) is the identity map; group products map to matrix products.
Matrix wigner_D(HalfInt j, const Matrix2& u, double tol = 1e-8);

/// Spins j with |a-b| <= j <= a+b in integer steps: the coupling range
/// of a (x) b.
std::vector<HalfInt> couple_range(HalfInt a, HalfInt b);

/// <A a B b | j sigma> lookup.
struct CgQuery {
  HalfInt A, a, B, b, j, sigma;
};

/// Clebsch-Gordan coefficient under the Condon-Shortley convention:
/// all coefficients real, <A A B (j-A) | j j> > 0, lowering-consistent
/// columns.  Zero whenever a + b != sigma; throws if j is outside
/// couple_range(A, B) or any weight is inconsistent with its spin.
double clebsch_gordan(const CgQuery& q);

/// Full table for coupling A (x) B -> j: a (2A+1)(2B+1) x (2j+1) matrix
/// with rows indexed by (a, b), a outer / b inner, both descending, and
/// columns by sigma descending.  Columns are orthonormal and intertwine
/// J^(A)(x)1 + 1(x)J^(B) with J^(j).
Matrix cg_table(HalfInt A, HalfInt B, HalfInt j);

}  // namespace relrep
