#include "relrep/intertwiner.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "relrep/error.hpp"
#include "relrep/su2.hpp"

namespace relrep {

namespace {

// Null space of a stacked condition matrix: columns of V whose singular
// values fall below 1e-8 of the largest (or of 1, whichever is bigger, so
// an all-zero condition still reports a full kernel).
std::vector<Vector> null_space(const Matrix& m) {
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-8 * std::max(sv.size() ? sv(0) : 0.0, 1.0);
  std::vector<Vector> out;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) < cutoff) out.push_back(svd.matrixV().col(i));
  // Pathological wide inputs: V may have more columns than singular values.
  for (Eigen::Index i = sv.size(); i < svd.matrixV().cols(); ++i)
    out.push_back(svd.matrixV().col(i));
  return out;
}

// Make the first entry (row-major scan) with appreciable modulus real
// positive; keeps output reproducible across eigensolver phase choices.
void fix_phase(Matrix& m) {
  const double scale = max_abs(m);
  if (scale == 0) return;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex e = m(r, c);
      if (std::abs(e) > 1e-6 * scale) {
        m *= std::conj(e) / std::abs(e);
        return;
      }
    }
  }
}

Matrix unvec(const Vector& v, int rows, int cols) {
  Matrix m(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) m(r, c) = v(c * rows + r);
  return m;
}

// Stacked linear conditions dD(X) u - u rhs(X) = 0 over the listed
// generator pairs, in vec (column-major) form.
Matrix stack_conditions(const std::vector<Matrix>& reps,
                        const std::vector<Matrix>& rhs) {
  const int dim = static_cast<int>(reps[0].rows());
  const int nj = static_cast<int>(rhs[0].rows());
  const Matrix id_dim = Matrix::Identity(dim, dim);
  const Matrix id_nj = Matrix::Identity(nj, nj);
  Matrix stacked(static_cast<int>(reps.size()) * dim * nj, dim * nj);
  for (std::size_t i = 0; i < reps.size(); ++i)
    stacked.middleRows(static_cast<int>(i) * dim * nj, dim * nj) =
        kron(id_nj, reps[i]) - kron(rhs[i].transpose(), id_dim);
  return stacked;
}

std::vector<CoefficientTensor> solve_zero(CoefficientTensor::Kind kind, HalfInt j,
                                          const RepSum& rep) {
  const GeneratorSet gens = generators_sum(rep);
  const SpinMatrices sm = spin_matrices(j);
  const std::vector<Matrix> reps = little_algebra(true, gens);
  std::vector<Matrix> rhs = {sm.j1(), sm.j2(), sm.j3()};
  if (kind == CoefficientTensor::Kind::V)
    for (auto& m : rhs) m = -m.conjugate().eval();

  const int dim = gens.dim(), nj = static_cast<int>(j.twice()) + 1;
  std::vector<CoefficientTensor> out;
  for (const Vector& v : null_space(stack_conditions(reps, rhs))) {
    CoefficientTensor t;
    t.kind = kind;
    t.rep = rep;
    t.entries = unvec(v, dim, nj);
    fix_phase(t.entries);
    out.push_back(std::move(t));
  }
  return out;
}

HalfInt spec_j(const FieldSpec& spec, const CoefficientTensor& u0) {
  const HalfInt j = spec.species.spin_or_helicity;
  const int want = spec.species.massless() ? 1 : static_cast<int>(j.twice()) + 1;
  if (u0.entries.cols() != want || u0.entries.rows() != spec.rep.dim())
    throw NumericError("coefficient tensor shape does not match the field spec");
  return j;
}

}  // namespace

std::vector<Matrix> little_algebra(bool massive, const GeneratorSet& gens) {
  if (massive) return {gens.j[0], gens.j[1], gens.j[2]};
  return {gens.j[1] - gens.k[0], -gens.j[0] - gens.k[1], gens.j[2]};
}

std::vector<CoefficientTensor> solve_u_zero(HalfInt j, const RepSum& rep) {
  return solve_zero(CoefficientTensor::Kind::U, j, rep);
}

std::vector<CoefficientTensor> solve_v_zero(HalfInt j, const RepSum& rep) {
  return solve_zero(CoefficientTensor::Kind::V, j, rep);
}

CoefficientTensor v_from_u(HalfInt j, const CoefficientTensor& u) {
  if (u.entries.cols() != j.twice() + 1)
    throw NumericError("v_from_u: column count does not match spin " + to_string(j));
  CoefficientTensor v = u;
  v.kind = CoefficientTensor::Kind::V;
  for (Eigen::Index c = 0; c < u.entries.cols(); ++c) {
    const HalfInt sigma = HalfInt::from_twice(j.twice() - 2 * static_cast<int>(c));
    v.entries.col(c) =
        double(parity_sign(j + sigma)) * u.entries.col(weight_index(j, -sigma));
  }
  return v;
}

Matrix conjugation_matrix(HalfInt j) {
  const int n = static_cast<int>(j.twice()) + 1;
  Matrix c = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const HalfInt sigma = HalfInt::from_twice(j.twice() - 2 * i);
    c(i, weight_index(j, -sigma)) = parity_sign(j + sigma);
  }
  return c;
}

int compatibility(HalfInt j, const RepSum& rep) {
  int count = 0;
  for (const auto& label : rep.parts) {
    const auto range = couple_range(label.A, label.B);
    count += std::find(range.begin(), range.end(), j) != range.end() ? 1 : 0;
  }
  return count;
}

CoefficientTensor cg_intertwiner(HalfInt A, HalfInt B, HalfInt j, double mass) {
  if (!(mass > 0)) throw NumericError("cg_intertwiner: mass must be positive");
  CoefficientTensor t;
  t.kind = CoefficientTensor::Kind::U;
  t.rep.parts = {RepLabel{A, B}};
  t.entries = cg_table(A, B, j) / std::sqrt(2.0 * mass);
  return t;
}

CoefficientTensor boost_coefficients(const FieldSpec& spec, const CoefficientTensor& u0,
                                     const FourVector& p, double tol) {
  spec_j(spec, u0);
  if (u0.momentum)
    throw NumericError("boost_coefficients: input must be a standard-momentum tensor");
  const Matrix2 l = standard_boost(p, spec.species.mass, tol);
  const GeneratorSet gens = generators_sum(spec.rep);
  CoefficientTensor out = u0;
  out.momentum = p;
  out.entries = normalization(spec.species, p) * (exp_rep(gens, l) * u0.entries);
  return out;
}

double covariance_residual(const FieldSpec& spec, const CoefficientTensor& u0,
                           const Matrix2& lambda, const FourVector& p, double tol) {
  const HalfInt j = spec_j(spec, u0);
  if (spec.species.massless())
    throw NumericError("covariance_residual: use massless_covariance_residual");

  const FourVector q = apply(covering(lambda), p);
  const Matrix2 w = wigner_rotation(lambda, p, spec.species.mass, tol);
  Matrix d = wigner_D(j, w, std::max(tol, 1e-8));
  if (u0.kind == CoefficientTensor::Kind::V) d = d.conjugate().eval();

  const Matrix up = boost_coefficients(spec, u0, p, tol).entries;
  const Matrix uq = boost_coefficients(spec, u0, q, tol).entries;
  const GeneratorSet gens = generators_sum(spec.rep);
  const Matrix lhs = std::sqrt(q.t / p.t) * (uq * d);
  const Matrix rhs = exp_rep(gens, lambda) * up;
  return max_abs(lhs - rhs);
}

double massless_covariance_residual(const RepLabel& label, HalfInt sigma,
                                    const CoefficientTensor& u0, const Matrix2& lambda,
                                    const FourVector& p, double tol) {
  FieldSpec spec;
  spec.rep.parts = {label};
  spec.species = {"massless", 0.0, sigma, Statistics::Bose};

  const FourVector q = apply(covering(lambda), p);
  const Matrix2 w = wigner_rotation(lambda, p, 0.0, tol);
  const double theta = massless_params(w, std::max(tol, 1e-7)).theta;
  // The standard-momentum solution obeys dD(J_3) u = sigma u, whose group
  // version sends R(theta) = exp(+i theta J_3) to e^{+i theta sigma}; the
  // v-solution carries the conjugate phase.
  const double sign = u0.kind == CoefficientTensor::Kind::V ? -1.0 : 1.0;
  const Complex phase = std::exp(Complex(0, sign * theta * sigma.value()));

  const Matrix up = boost_coefficients(spec, u0, p, tol).entries;
  const Matrix uq = boost_coefficients(spec, u0, q, tol).entries;
  const GeneratorSet gens = generators_AB(label);
  const Matrix lhs = std::sqrt(q.t / p.t) * phase * uq;
  const Matrix rhs = exp_rep(gens, lambda) * up;
  return max_abs(lhs - rhs);
}

std::optional<CoefficientTensor> solve_massless(CoefficientTensor::Kind kind,
                                                HalfInt sigma, const RepLabel& label) {
  const GeneratorSet gens = generators_AB(label);
  const std::vector<Matrix> little = little_algebra(false, gens);
  const double s = kind == CoefficientTensor::Kind::U ? sigma.value() : -sigma.value();

  const int dim = gens.dim();
  Matrix stacked(3 * dim, dim);
  stacked.middleRows(0, dim) = little[0];
  stacked.middleRows(dim, dim) = little[1];
  stacked.middleRows(2 * dim, dim) = little[2] - s * Matrix::Identity(dim, dim);

  const auto kernel = null_space(stacked);
  if (kernel.empty()) return std::nullopt;
  if (kernel.size() > 1)
    throw NumericError("solve_massless: unexpected degenerate solution space");

  CoefficientTensor t;
  t.kind = kind;
  t.rep.parts = {label};
  t.entries = kernel[0];
  t.entries /= t.entries.norm();
  fix_phase(t.entries);
  return t;
}

}  // namespace relrep
