#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "relrep/linalg.hpp"

namespace relrep {

/// Real four-vector (t, x, y, z) with metric signature (-,+,+,+).
struct FourVector {
  double t = 0, x = 0, y = 0, z = 0;

  double operator[](int mu) const {
    return mu == 0 ? t : (mu == 1 ? x : (mu == 2 ? y : z));
  }
  double& operator[](int mu) {
    return mu == 0 ? t : (mu == 1 ? x : (mu == 2 ? y : z));
  }
  double spatial_norm() const { return std::sqrt(x * x + y * y + z * z); }
  double max_abs() const {
    return std::max(std::max(std::abs(t), std::abs(x)),
                    std::max(std::abs(y), std::abs(z)));
  }
  friend FourVector operator+(const FourVector& a, const FourVector& b) {
    return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend FourVector operator-(const FourVector& a, const FourVector& b) {
    return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend FourVector operator*(double c, const FourVector& a) {
    return {c * a.t, c * a.x, c * a.y, c * a.z};
  }
};

/// p.q = -p0 q0 + p.q ; minkowski_norm2(p) = p.p (negative on mass shells).
double minkowski_dot(const FourVector& p, const FourVector& q);
double minkowski_norm2(const FourVector& p);

/// Parse "t,x,y,z" / render in the same comma-separated form.
FourVector parse_four_vector(const std::string& text);
std::string to_string(const FourVector& p);

/// Real 4x4 matrix acting on (t, x, y, z).
using LorentzMatrix = Eigen::Matrix4d;

FourVector apply(const LorentzMatrix& m, const FourVector& p);

/// X(p) = [[t+z, x+iy], [x-iy, t-z]]; det X = -minkowski_norm2(p).
Matrix2 to_hermitian(const FourVector& p);

/// Inverse of to_hermitian; rejects non-Hermitian input.
FourVector from_hermitian(const Matrix2& x, double tol = 1e-8);

/// The two-to-one covering homomorphism: A acts by X -> A X A^dag, which
/// preserves det and therefore the metric.  covering(-A) == covering(A),
/// products map to products, and the special unitary subgroup lands on
/// spatial rotations.
LorentzMatrix covering(const Matrix2& a);

/// Momentum orbit classes and their standard representatives.
enum class ShellClass {
  MassivePos,   // p.p = -M^2, p0 > 0, k = (M, 0, 0, 0)
  MassiveNeg,   // p.p = -M^2, p0 < 0, k = (-M, 0, 0, 0)
  MasslessPos,  // p.p = 0, p0 > 0, k = (1, 0, 0, 1)
  MasslessNeg,  // p.p = 0, p0 < 0, k = (-1, 0, 0, 1)
  Tachyonic,    // p.p = N^2 > 0, k = (0, 0, 0, N)
  Vacuum,       // p = 0
};

std::string to_string(ShellClass c);

struct ShellInfo {
  ShellClass shell;
  double invariant = 0;  // M for massive, N for tachyonic, 0 otherwise
  FourVector standard;   // orbit representative k
};

/// Orbit classification with relative tolerance tol * max(1, |p|_inf^2)
/// on the invariant; sign decisions use tol * max(1, |p|_inf).
ShellInfo classify(const FourVector& p, double tol = 1e-9);

/// Positive Hermitian standard boost exp(theta p_hat.sigma/2) with
/// cosh(theta) = p0/M; its covering maps (M,0,0,0) to p.  Rejects momenta
/// that are not on the positive massive shell of the given mass.
Matrix2 standard_boost_massive(const FourVector& p, double mass, double tol = 1e-9);

/// Standard boost for the positive massless shell: a pure z-boost taking
/// (1,0,0,1) to (|p|,0,0,|p|) followed by the rotation z_hat -> p_hat
/// (y-rotation by the polar angle, then z-rotation by the azimuth).
Matrix2 standard_boost_massless(const FourVector& p, double tol = 1e-9);

/// Standard boost selected by the shell class of p (massive needs the mass).
Matrix2 standard_boost(const FourVector& p, double mass, double tol = 1e-9);

/// W(Lambda, p) = L(p')^{-1} Lambda L(p) with p' = covering(Lambda) p;
/// fixes the standard momentum of p's shell.  Defined for the two positive
/// shells; mass is only consulted on the massive one.
Matrix2 wigner_rotation(const Matrix2& lambda, const FourVector& p, double mass,
                        double tol = 1e-9);

/// Parameters of the little group of k = (1,0,0,1).  Its elements are the
/// upper-triangular unimodular matrices
///   W(theta, alpha, beta) = S(alpha, beta) R(theta)
///   S = [[1, alpha - i beta], [0, 1]],  R = diag(e^{i theta/2}, e^{-i theta/2})
/// with theta in (-2 pi, 2 pi] so the two preimages of a Lorentz-level
/// element stay distinguishable (theta + 2 pi flips the overall sign).
/// The signs are calibrated so that covering(massless_element(t, a, b))
/// equals the classical ISO(2) matrix S~(a, b) R~(t) entrywise, where R~
/// rotates (x, y) by (x', y') = (x cos t + y sin t, -x sin t + y cos t) and
/// S~ shears with zeta = (a^2 + b^2)/2.
struct MasslessLittleParams {
  double theta = 0, alpha = 0, beta = 0;
};

Matrix2 massless_element(const MasslessLittleParams& w);

/// Inverse of massless_element: theta = 2 arg(W_00), alpha - i beta =
/// W_01 W_00.  Rejects matrices that are not upper triangular unimodular.
MasslessLittleParams massless_params(const Matrix2& w, double tol = 1e-9);

/// Weight M/p0 of the invariant measure d^3p M/p0 on the positive massive
/// shell.
double invariant_measure_weight(const FourVector& p, double mass, double tol = 1e-9);

}  // namespace relrep
