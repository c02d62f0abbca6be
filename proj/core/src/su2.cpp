#include "relrep/su2.hpp"

#include <algorithm>
#include <cmath>

#include "relrep/error.hpp"

namespace relrep {

namespace {

// sqrt((j -+ s)(j +- s + 1)) evaluated exactly on twice-values.
double ladder_amp(HalfInt j, HalfInt s, int dir) {
  const double jj = j.value(), ss = s.value();
  const double prod = dir > 0 ? (jj - ss) * (jj + ss + 1) : (jj + ss) * (jj - ss + 1);
  return prod > 0 ? std::sqrt(prod) : 0.0;
}

}  // namespace

SpinMatrices spin_matrices(HalfInt j) {
  if (j < HalfInt(0)) throw NumericError("spin_matrices: negative spin " + to_string(j));
  const int n = static_cast<int>(j.twice()) + 1;
  SpinMatrices m{j, Matrix::Zero(n, n), Matrix::Zero(n, n), Matrix::Zero(n, n)};
  for (int i = 0; i < n; ++i) {
    const HalfInt s = HalfInt::from_twice(j.twice() - 2 * i);
    m.jz(i, i) = s.value();
    if (i > 0) m.jplus(i - 1, i) = ladder_amp(j, s, +1);   // s -> s+1 lives one row up
    if (i + 1 < n) m.jminus(i + 1, i) = ladder_amp(j, s, -1);
  }
  return m;
}

int weight_index(HalfInt j, HalfInt sigma) {
  if (sigma > j || sigma < -j || (j - sigma).is_half_odd())
    throw NumericError("weight " + to_string(sigma) + " invalid for spin " + to_string(j));
  return static_cast<int>((j - sigma).twice() / 2);
}

Su2AxisAngle su2_axis_angle(const Matrix2& u, double tol) {
  if (std::abs(u.determinant() - 1.0) > tol)
    throw NumericError("su2_axis_angle: determinant differs from 1");
  if ((u.adjoint() * u - Matrix2::Identity()).cwiseAbs().maxCoeff() > tol)
    throw NumericError("su2_axis_angle: matrix is not unitary");

  Su2AxisAngle out{1, 0.0, {0.0, 0.0, 1.0}};
  Matrix2 v = u;
  double c = 0.5 * std::real(v.trace());
  if (c < 0) {
    out.s = -1;
    v = -v;
    c = -c;
  }
  // v = cos(phi/2) - i sin(phi/2) n.sigma, so the traceless part carries
  // sin(phi/2) componentwise.  Recovering phi from atan2 instead of
  // acos(trace/2) keeps full precision near phi = 0, where acos would
  // amplify rounding in the trace to sqrt(eps)-sized angles.
  const Matrix2 m = Complex(0, 1) * (v - 0.5 * v.trace() * Matrix2::Identity());
  const double n1 = std::real(m(0, 1));
  const double n2 = -std::imag(m(0, 1));
  const double n3 = std::real(m(0, 0));
  const double sn = std::sqrt(n1 * n1 + n2 * n2 + n3 * n3);
  out.phi = 2.0 * std::atan2(sn, c);  // in [0, pi] since c, sn >= 0
  if (sn > 1e-150) {
    out.axis[0] = n1 / sn;
    out.axis[1] = n2 / sn;
    out.axis[2] = n3 / sn;
  } else {
    out.phi = 0.0;
  }
  return out;
}

Matrix wigner_D(HalfInt j, const Matrix2& u, double tol) {
  const Su2AxisAngle aa = su2_axis_angle(u, tol);
  const SpinMatrices sm = spin_matrices(j);
  const Matrix h = aa.axis[0] * sm.j1() + aa.axis[1] * sm.j2() + aa.axis[2] * sm.j3();
  Matrix d = exp_i_hermitian(h, aa.phi);
  if (aa.s < 0 && j.is_half_odd()) d = -d;  // s^(2j)
  return d;
}

std::vector<HalfInt> couple_range(HalfInt a, HalfInt b) {
  if (a < HalfInt(0) || b < HalfInt(0))
    throw NumericError("couple_range: negative spin");
  std::vector<HalfInt> out;
  HalfInt lo = a < b ? b - a : a - b;
  for (HalfInt j = lo; j <= a + b; j += HalfInt(1)) out.push_back(j);
  return out;
}

Matrix cg_table(HalfInt A, HalfInt B, HalfInt j) {
  const auto range = couple_range(A, B);
  if (std::find(range.begin(), range.end(), j) == range.end())
    throw NumericError("cg_table: j = " + to_string(j) + " outside coupling range of (" +
                       to_string(A) + ", " + to_string(B) + ")");

  const int na = static_cast<int>(A.twice()) + 1;
  const int nb = static_cast<int>(B.twice()) + 1;
  const int nj = static_cast<int>(j.twice()) + 1;
  const auto idx = [&](HalfInt a, HalfInt b) {
    return weight_index(A, a) * nb + weight_index(B, b);
  };

  Matrix table = Matrix::Zero(na * nb, nj);

  // Top state sigma = j: the kernel of the raising operator on the diagonal
  // a + b = j, built by the two-term recurrence that J+ = J+^(A) + J+^(B)
  // imposes, then normalised with <A A B (j-A) | j j> > 0 (Condon-Shortley).
  Eigen::VectorXd top = Eigen::VectorXd::Zero(na * nb);
  const HalfInt a_lo = std::max(-A, j - B), a_hi = A;
  double c = 1.0;
  top(idx(a_lo, j - a_lo)) = c;
  for (HalfInt a = a_lo; a < a_hi; a += HalfInt(1)) {
    const HalfInt b = j - a;
    c = -c * ladder_amp(A, a, +1) / ladder_amp(B, b - HalfInt(1), +1);
    top(idx(a + HalfInt(1), b - HalfInt(1))) = c;
  }
  top.normalize();
  if (top(idx(a_hi, j - a_hi)) < 0) top = -top;
  table.col(0) = top.cast<Complex>();

  // Lower the whole column: |j, s-1> = J- |j, s> / sqrt((j+s)(j-s+1)).
  for (int col = 1; col < nj; ++col) {
    const HalfInt s = HalfInt::from_twice(j.twice() - 2 * (col - 1));
    Matrix next = Matrix::Zero(na * nb, 1);
    for (int ia = 0; ia < na; ++ia) {
      for (int ib = 0; ib < nb; ++ib) {
        const Complex amp = table(ia * nb + ib, col - 1);
        if (amp == Complex(0)) continue;
        const HalfInt a = HalfInt::from_twice(A.twice() - 2 * ia);
        const HalfInt b = HalfInt::from_twice(B.twice() - 2 * ib);
        if (a > -A) next((ia + 1) * nb + ib, 0) += amp * ladder_amp(A, a, -1);
        if (b > -B) next(ia * nb + ib + 1, 0) += amp * ladder_amp(B, b, -1);
      }
    }
    table.col(col) = next / ladder_amp(j, s, -1);
  }
  return table;
}

double clebsch_gordan(const CgQuery& q) {
  if (q.a + q.b != q.sigma) {
    // Still validate the query before reporting the selection-rule zero.
    weight_index(q.A, q.a);
    weight_index(q.B, q.b);
    weight_index(q.j, q.sigma);
    const auto range = couple_range(q.A, q.B);
    if (std::find(range.begin(), range.end(), q.j) == range.end())
      throw NumericError("clebsch_gordan: j outside coupling range");
    return 0.0;
  }
  const Matrix table = cg_table(q.A, q.B, q.j);
  const int row = weight_index(q.A, q.a) * (static_cast<int>(q.B.twice()) + 1) +
                  weight_index(q.B, q.b);
  return std::real(table(row, weight_index(q.j, q.sigma)));
}

}  // namespace relrep
