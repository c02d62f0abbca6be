#pragma once

#include <optional>
#include <vector>

#include "relrep/half_int.hpp"
#include "relrep/lorentz_rep.hpp"
#include "relrep/minkowski.hpp"
#include "relrep/state.hpp"

namespace relrep {

/// A finite-dimensional cover representation paired with the species whose
/// creation/annihilation operators its coefficient functions multiply.
struct FieldSpec {
  RepSum rep;
  SpeciesDescriptor species;
};

/// Coefficient tensor u_l(p, sigma) or v_l(p, sigma): rows indexed by the
/// representation basis l, columns by sigma descending (massive) or the
/// single helicity column (massless).  momentum is empty for the
/// standard-momentum tensor.
struct CoefficientTensor {
  enum class Kind { U, V };
  Kind kind = Kind::U;
  std::optional<FourVector> momentum;
  RepSum rep;
  Matrix entries;
};

/// Generators of the little algebra of the standard momentum: J_1, J_2, J_3
/// for the massive shell; J_2 - K_1, -J_1 - K_2, J_3 (two nilpotents and
/// the z-rotation) for the massless one.
std::vector<Matrix> little_algebra(bool massive, const GeneratorSet& gens);

/// Orthonormal basis (Frobenius inner product) of the u-intertwiner space
///   { u : dD(X) u = u J^(j)(X)  for the rotation generators X },
/// computed as an SVD null space with singular values below 1e-8 of the
/// largest counted as zero.  Each basis element is phase-fixed so its
/// first nonvanishing entry is real positive.  The dimension equals
/// compatibility(j, rep).
std::vector<CoefficientTensor> solve_u_zero(HalfInt j, const RepSum& rep);

/// Same for the conjugate-row condition dD(X) v = -v J^(j)(X)^*.
std::vector<CoefficientTensor> solve_v_zero(HalfInt j, const RepSum& rep);

/// Index flip that maps u-solutions to v-solutions:
/// v_{l,sigma} = (-1)^(j+sigma) u_{l,-sigma}.
CoefficientTensor v_from_u(HalfInt j, const CoefficientTensor& u);

/// C_{s s'} = (-1)^(j+s) delta_{s+s',0}; conjugates the spin matrices:
/// -J^(j)* = C J^(j) C^{-1}.
Matrix conjugation_matrix(HalfInt j);

/// Number of irreducible parts (A_i, B_i) with |A_i-B_i| <= j <= A_i+B_i:
/// the dimension of the intertwiner spaces above.
int compatibility(HalfInt j, const RepSum& rep);

/// Closed-form u at zero momentum for one irreducible block:
/// u_{(a,b),sigma} = (2m)^{-1/2} <A a B b | j sigma>.  Lies in the span of
/// solve_u_zero(j, (A,B)).
CoefficientTensor cg_intertwiner(HalfInt A, HalfInt B, HalfInt j, double mass);

/// Coefficient tensor at momentum p: u(p) = N(p) D(L(p)) u0 with N the
/// state normalization of the species and L its standard boost.
CoefficientTensor boost_coefficients(const FieldSpec& spec, const CoefficientTensor& u0,
                                     const FourVector& p, double tol = 1e-9);

/// Max-norm residual of the finite-dimensional covariance identity
///
///   sqrt(q0/p0) u(q) D^(j)(W(lambda,p)) = D(lambda) u(p),   q = covering(lambda) p
///
/// (v tensors use D^(j)(W)^* on the left).  Zero for genuine intertwiners.
double covariance_residual(const FieldSpec& spec, const CoefficientTensor& u0,
                           const Matrix2& lambda, const FourVector& p,
                           double tol = 1e-9);

/// Massless analogue for one irreducible block and helicity sigma:
/// the D^(j) factor collapses to the little-group phase e^{+i theta sigma}
/// for u (the one-dimensional representation integrating dD(J_3) u =
/// sigma u; R(theta) = exp(+i theta J_3)) and its conjugate for v.
double massless_covariance_residual(const RepLabel& label, HalfInt sigma,
                                    const CoefficientTensor& u0, const Matrix2& lambda,
                                    const FourVector& p, double tol = 1e-9);

/// Massless standard-momentum solutions for one irreducible block.  The
/// u-solution exists iff sigma = B - A and the v-solution iff
/// sigma = A - B; both are one-dimensional, unit-norm, and supported on
/// the single weight (a, b) = (-A, B).  Returns nothing otherwise.
std::optional<CoefficientTensor> solve_massless(CoefficientTensor::Kind kind,
                                                HalfInt sigma, const RepLabel& label);

}  // namespace relrep
