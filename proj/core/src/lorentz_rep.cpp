#include "relrep/lorentz_rep.hpp"

#include <cctype>
#include <cmath>

#include "relrep/error.hpp"

namespace relrep {

namespace {

void skip_spaces(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

HalfInt parse_component(const std::string& s, std::size_t& i, char terminator) {
  std::size_t end = s.find(terminator, i);
  if (end == std::string::npos)
    throw ParseError("rep label: missing '" + std::string(1, terminator) + "' in '" + s + "'");
  std::string piece = s.substr(i, end - i);
  // parse_half_int tolerates no blanks; trim them here.
  while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front())))
    piece.erase(piece.begin());
  while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
    piece.pop_back();
  i = end + 1;
  return parse_half_int(piece);
}

}  // namespace

RepSum parse_rep_sum(const std::string& text) {
  RepSum rep;
  std::size_t i = 0;
  skip_spaces(text, i);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("rep label: expected '(' in '" + text + "'");
    ++i;
    RepLabel label;
    label.A = parse_component(text, i, ',');
    label.B = parse_component(text, i, ')');
    if (label.A < HalfInt(0) || label.B < HalfInt(0))
      throw ParseError("rep label: negative spin in '" + text + "'");
    rep.parts.push_back(label);
    skip_spaces(text, i);
    if (i == text.size()) break;
    if (text[i] != '+') throw ParseError("rep label: expected '+' in '" + text + "'");
    ++i;
    skip_spaces(text, i);
    if (i == text.size())
      throw ParseError("rep label: trailing '+' in '" + text + "'");
  }
  if (rep.parts.empty()) throw ParseError("rep label: empty '" + text + "'");
  return rep;
}

std::string to_string(const RepLabel& label) {
  return "(" + to_string(label.A) + "," + to_string(label.B) + ")";
}

std::string to_string(const RepSum& rep) {
  std::string out;
  for (std::size_t i = 0; i < rep.parts.size(); ++i) {
    if (i) out += "+";
    out += to_string(rep.parts[i]);
  }
  return out;
}

GeneratorSet generators_AB(const RepLabel& label) {
  const SpinMatrices ja = spin_matrices(label.A);
  const SpinMatrices jb = spin_matrices(label.B);
  const Matrix ia = Matrix::Identity(ja.jz.rows(), ja.jz.rows());
  const Matrix ib = Matrix::Identity(jb.jz.rows(), jb.jz.rows());

  GeneratorSet g;
  g.rep.parts = {label};
  const Matrix a_part[3] = {kron(ja.j1(), ib), kron(ja.j2(), ib), kron(ja.j3(), ib)};
  const Matrix b_part[3] = {kron(ia, jb.j1()), kron(ia, jb.j2()), kron(ia, jb.j3())};
  for (int i = 0; i < 3; ++i) {
    g.j[i] = a_part[i] + b_part[i];
    g.k[i] = Complex(0, -1) * (a_part[i] - b_part[i]);
  }
  return g;
}

GeneratorSet generators_sum(const RepSum& rep) {
  if (rep.parts.empty()) throw NumericError("generators_sum: empty representation");
  GeneratorSet g;
  g.rep = rep;
  const int n = rep.dim();
  for (int i = 0; i < 3; ++i) {
    g.j[i] = Matrix::Zero(n, n);
    g.k[i] = Matrix::Zero(n, n);
  }
  int offset = 0;
  for (const auto& label : rep.parts) {
    const GeneratorSet block = generators_AB(label);
    const int d = label.dim();
    for (int i = 0; i < 3; ++i) {
      g.j[i].block(offset, offset, d, d) = block.j[i];
      g.k[i].block(offset, offset, d, d) = block.k[i];
    }
    offset += d;
  }
  return g;
}

Matrix exp_rep(const GeneratorSet& gens, const Matrix2& lambda, double tol) {
  if (std::abs(lambda.determinant() - 1.0) > tol)
    throw NumericError("exp_rep: determinant differs from 1");

  // Polar split lambda = u e^h through the SVD lambda = w s v^dag: the
  // unitary factor u = w v^dag comes out unitary to rounding even for large
  // boosts (forming lambda^dag lambda instead would square the condition
  // number), and e^h = v s v^dag.
  Eigen::JacobiSVD<Matrix2> svd(lambda, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector2d sv = svd.singularValues().cwiseMax(1e-300);
  const Matrix2 v = svd.matrixV();
  const Matrix2 h =
      v * Eigen::Vector2cd(std::log(sv(0)), std::log(sv(1))).asDiagonal() * v.adjoint();
  const Matrix2 u = svd.matrixU() * v.adjoint();

  // Boost factor: h = (xi/2) n.sigma corresponds to exp(-i xi n.K).
  const double hx = std::real(h(1, 0));
  const double hy = std::imag(h(1, 0));
  const double hz = 0.5 * std::real(h(0, 0) - h(1, 1));
  const double half_xi = std::sqrt(hx * hx + hy * hy + hz * hz);
  Matrix boost = Matrix::Identity(gens.dim(), gens.dim());
  if (half_xi > 1e-15) {
    // -i xi n.K is Hermitian for any (A,B) content, so exponentiate exactly.
    const Matrix m = Complex(0, -2.0) * (hx * gens.k[0] + hy * gens.k[1] + hz * gens.k[2]);
    boost = exp_hermitian(m);
  }

  // Rotation factor via the branch-safe axis-angle split; a leading sign is
  // reproduced as exp(-i 2 pi J_3), which is the image of -1.
  const Su2AxisAngle aa = su2_axis_angle(u, std::max(tol, 1e-8));
  const Matrix hrot =
      aa.axis[0] * gens.j[0] + aa.axis[1] * gens.j[1] + aa.axis[2] * gens.j[2];
  Matrix rot = exp_i_hermitian(hrot, aa.phi);
  if (aa.s < 0) rot = exp_i_hermitian(gens.j[2], 2.0 * M_PI) * rot;

  return rot * boost;
}

DescentClass descent_classification(const RepSum& rep) {
  if (rep.parts.empty()) throw NumericError("descent_classification: empty representation");
  bool all_int = true, all_half = true;
  for (const auto& label : rep.parts) {
    const HalfInt s = label.A + label.B;
    all_int = all_int && s.is_integer();
    all_half = all_half && s.is_half_odd();
  }
  if (all_int) return DescentClass::Linear;
  if (all_half) return DescentClass::Projective;
  return DescentClass::CoverOnly;
}

std::string to_string(DescentClass c) {
  switch (c) {
    case DescentClass::Linear: return "linear_on_lorentz";
    case DescentClass::Projective: return "projective_on_lorentz";
    case DescentClass::CoverOnly: return "cover_only";
  }
  return "unknown";
}

}  // namespace relrep
