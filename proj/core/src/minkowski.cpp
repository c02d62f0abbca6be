#include "relrep/minkowski.hpp"

#include <cmath>
#include <sstream>

#include "relrep/error.hpp"

namespace relrep {

double minkowski_dot(const FourVector& p, const FourVector& q) {
  return -p.t * q.t + p.x * q.x + p.y * q.y + p.z * q.z;
}

double minkowski_norm2(const FourVector& p) { return minkowski_dot(p, p); }

FourVector parse_four_vector(const std::string& text) {
  std::istringstream in(text);
  FourVector p;
  char sep[3];
  if (!(in >> p.t >> sep[0] >> p.x >> sep[1] >> p.y >> sep[2] >> p.z) ||
      sep[0] != ',' || sep[1] != ',' || sep[2] != ',')
    throw ParseError("four-vector: expected 't,x,y,z' in '" + text + "'");
  std::string rest;
  if (in >> rest) throw ParseError("four-vector: trailing content in '" + text + "'");
  return p;
}

std::string to_string(const FourVector& p) {
  std::ostringstream out;
  out.precision(17);
  out << p.t << "," << p.x << "," << p.y << "," << p.z;
  return out.str();
}

FourVector apply(const LorentzMatrix& m, const FourVector& p) {
  const Eigen::Vector4d v = m * Eigen::Vector4d(p.t, p.x, p.y, p.z);
  return {v(0), v(1), v(2), v(3)};
}

Matrix2 to_hermitian(const FourVector& p) {
  Matrix2 x;
  x << Complex(p.t + p.z, 0), Complex(p.x, -p.y),
       Complex(p.x, p.y), Complex(p.t - p.z, 0);
  return x;
}

FourVector from_hermitian(const Matrix2& x, double tol) {
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  if ((x - x.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
    throw NumericError("from_hermitian: matrix is not Hermitian");
  return {0.5 * std::real(x(0, 0) + x(1, 1)), std::real(x(0, 1)),
          -std::imag(x(0, 1)), 0.5 * std::real(x(0, 0) - x(1, 1))};
}

LorentzMatrix covering(const Matrix2& a) {
  LorentzMatrix m;
  for (int nu = 0; nu < 4; ++nu) {
    FourVector e;
    e[nu] = 1.0;
    const Matrix2 image = a * to_hermitian(e) * a.adjoint();
    // image is Hermitian exactly (X Hermitian => A X A^dag Hermitian),
    // so read the components off directly.
    m(0, nu) = 0.5 * std::real(image(0, 0) + image(1, 1));
    m(1, nu) = std::real(image(0, 1));
    m(2, nu) = -std::imag(image(0, 1));
    m(3, nu) = 0.5 * std::real(image(0, 0) - image(1, 1));
  }
  return m;
}

std::string to_string(ShellClass c) {
  switch (c) {
    case ShellClass::MassivePos: return "massive_pos";
    case ShellClass::MassiveNeg: return "massive_neg";
    case ShellClass::MasslessPos: return "massless_pos";
    case ShellClass::MasslessNeg: return "massless_neg";
    case ShellClass::Tachyonic: return "tachyonic";
    case ShellClass::Vacuum: return "vacuum";
  }
  return "unknown";
}

ShellInfo classify(const FourVector& p, double tol) {
  const double scale = std::max(1.0, p.max_abs());
  const double n2 = minkowski_norm2(p);
  if (p.max_abs() <= tol) return {ShellClass::Vacuum, 0.0, FourVector{}};
  if (std::abs(n2) <= tol * scale * scale) {
    if (p.t > 0) return {ShellClass::MasslessPos, 0.0, {1, 0, 0, 1}};
    return {ShellClass::MasslessNeg, 0.0, {-1, 0, 0, 1}};
  }
  if (n2 < 0) {
    const double m = std::sqrt(-n2);
    if (p.t > 0) return {ShellClass::MassivePos, m, {m, 0, 0, 0}};
    return {ShellClass::MassiveNeg, m, {-m, 0, 0, 0}};
  }
  const double n = std::sqrt(n2);
  return {ShellClass::Tachyonic, n, {0, 0, 0, n}};
}

Matrix2 standard_boost_massive(const FourVector& p, double mass, double tol) {
  if (!(mass > 0)) throw NumericError("standard_boost_massive: mass must be positive");
  const ShellInfo info = classify(p, tol);
  if (info.shell != ShellClass::MassivePos)
    throw NumericError("standard_boost_massive: momentum not on a positive massive shell");
  const double scale = std::max(1.0, p.max_abs());
  if (std::abs(info.invariant - mass) > tol * scale)
    throw NumericError("standard_boost_massive: momentum off the mass-" +
                       std::to_string(mass) + " shell");

  const double r = p.spatial_norm();
  if (r == 0) return Matrix2::Identity();
  const double theta = std::acosh(std::max(1.0, p.t / mass));
  const double ch = std::cosh(0.5 * theta), sh = std::sinh(0.5 * theta);
  const double nx = p.x / r, ny = p.y / r, nz = p.z / r;
  Matrix2 b;
  b << Complex(ch + sh * nz, 0), Complex(sh * nx, -sh * ny),
       Complex(sh * nx, sh * ny), Complex(ch - sh * nz, 0);
  return b;
}

Matrix2 standard_boost_massless(const FourVector& p, double tol) {
  const ShellInfo info = classify(p, tol);
  if (info.shell != ShellClass::MasslessPos)
    throw NumericError("standard_boost_massless: momentum not on the positive massless shell");

  const double u = p.spatial_norm();
  const double root = std::sqrt(u);
  Matrix2 boost;
  boost << Complex(root, 0), Complex(0, 0), Complex(0, 0), Complex(1.0 / root, 0);

  const double rho = std::hypot(p.x, p.y);
  const double theta = std::atan2(rho, p.z);   // polar angle, in [0, pi]
  const double phi = rho > 0 ? std::atan2(p.y, p.x) : 0.0;

  Matrix2 rot_y;
  rot_y << Complex(std::cos(0.5 * theta), 0), Complex(-std::sin(0.5 * theta), 0),
           Complex(std::sin(0.5 * theta), 0), Complex(std::cos(0.5 * theta), 0);
  Matrix2 rot_z;
  rot_z << std::exp(Complex(0, -0.5 * phi)), Complex(0, 0),
           Complex(0, 0), std::exp(Complex(0, 0.5 * phi));
  return rot_z * rot_y * boost;
}

Matrix2 standard_boost(const FourVector& p, double mass, double tol) {
  const ShellInfo info = classify(p, tol);
  if (info.shell == ShellClass::MassivePos) return standard_boost_massive(p, mass, tol);
  if (info.shell == ShellClass::MasslessPos) return standard_boost_massless(p, tol);
  throw NumericError("standard_boost: no standard boost for shell class " +
                     to_string(info.shell));
}

Matrix2 wigner_rotation(const Matrix2& lambda, const FourVector& p, double mass,
                        double tol) {
  if (std::abs(lambda.determinant() - 1.0) > std::max(tol, 1e-8))
    throw NumericError("wigner_rotation: determinant differs from 1");
  const FourVector q = apply(covering(lambda), p);
  const Matrix2 lp = standard_boost(p, mass, tol);
  const Matrix2 lq = standard_boost(q, mass, tol);
  // L(q)^{-1} without inverting numerically: unimodular 2x2 adjugate.
  Matrix2 lq_inv;
  lq_inv << lq(1, 1), -lq(0, 1), -lq(1, 0), lq(0, 0);
  return lq_inv * lambda * lp;
}

Matrix2 massless_element(const MasslessLittleParams& w) {
  Matrix2 out;
  const Complex e = std::exp(Complex(0, 0.5 * w.theta));
  out << e, Complex(w.alpha, -w.beta) * std::conj(e), Complex(0, 0), std::conj(e);
  return out;
}

MasslessLittleParams massless_params(const Matrix2& w, double tol) {
  const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
  if (std::abs(w(1, 0)) > tol * scale)
    throw NumericError("massless_params: matrix is not in the (1,0,0,1) little group");
  if (std::abs(w.determinant() - 1.0) > std::max(tol, 1e-8))
    throw NumericError("massless_params: determinant differs from 1");
  if (std::abs(std::abs(w(0, 0)) - 1.0) > std::max(tol, 1e-8))
    throw NumericError("massless_params: diagonal is not a pure phase");

  MasslessLittleParams out;
  // w00 = e^{i theta/2}, so 2 arg lands in (-2pi, 2pi] directly; theta and
  // theta + 2pi are the two preimages of one Lorentz-level element.
  out.theta = 2.0 * std::arg(w(0, 0));
  const Complex ab = w(0, 1) * w(0, 0);  // = alpha - i beta
  out.alpha = std::real(ab);
  out.beta = -std::imag(ab);
  return out;
}

double invariant_measure_weight(const FourVector& p, double mass, double tol) {
  if (!(mass > 0)) throw NumericError("invariant_measure_weight: mass must be positive");
  const ShellInfo info = classify(p, tol);
  if (info.shell != ShellClass::MassivePos)
    throw NumericError("invariant_measure_weight: momentum not on a positive massive shell");
  if (std::abs(info.invariant - mass) > tol * std::max(1.0, p.max_abs()))
    throw NumericError("invariant_measure_weight: momentum not on the given mass shell");
  return mass / p.t;
}

}  // namespace relrep
