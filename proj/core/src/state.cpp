#include "relrep/state.hpp"

#include <cmath>

#include "relrep/error.hpp"
#include "relrep/su2.hpp"

namespace relrep {

std::string to_string(Statistics s) {
  return s == Statistics::Bose ? "bose" : "fermi";
}

void validate(const SpeciesDescriptor& s) {
  if (s.name.empty()) throw NumericError("species: empty name");
  if (s.mass < 0) throw NumericError("species '" + s.name + "': negative mass");
  if (!s.massless() && s.spin_or_helicity < HalfInt(0))
    throw NumericError("species '" + s.name + "': negative spin");
}

void validate(const Ket& k, double tol) {
  validate(k.species);
  const double scale = std::max(1.0, k.p.max_abs());
  if (k.p.t <= 0) throw NumericError("ket: momentum has non-positive energy");
  const double shell = minkowski_norm2(k.p) + k.species.mass * k.species.mass;
  if (std::abs(shell) > tol * scale * scale)
    throw NumericError("ket: momentum off the '" + k.species.name + "' shell");
  if (k.species.massless()) {
    if (k.sigma != k.species.spin_or_helicity)
      throw NumericError("ket: massless sigma must equal the species helicity");
  } else {
    const HalfInt j = k.species.spin_or_helicity;
    if (k.sigma > j || k.sigma < -j || (j - k.sigma).is_half_odd())
      throw NumericError("ket: sigma " + to_string(k.sigma) + " invalid for spin " +
                         to_string(j));
  }
}

namespace {

bool same_ket(const Ket& a, const Ket& b, double tol) {
  if (a.sigma != b.sigma || a.species.name != b.species.name) return false;
  const double scale = std::max(1.0, std::max(a.p.max_abs(), b.p.max_abs()));
  return (a.p - b.p).max_abs() <= tol * scale;
}

}  // namespace

void StateVector::add(const Ket& ket, Complex amp, double tol) {
  for (auto& term : terms) {
    if (same_ket(term.ket, ket, tol)) {
      term.amp += amp;
      return;
    }
  }
  terms.push_back({ket, amp});
}

double normalization(const SpeciesDescriptor& s, const FourVector& p) {
  if (p.t <= 0) throw NumericError("normalization: non-positive energy");
  return s.massless() ? std::sqrt(1.0 / p.t) : std::sqrt(s.mass / p.t);
}

StateVector transform(const StateVector& state, const Matrix2& lambda,
                      const FourVector& a, double tol) {
  const LorentzMatrix big = covering(lambda);
  StateVector out;
  for (const auto& term : state.terms) {
    validate(term.ket);
    const SpeciesDescriptor& sp = term.ket.species;
    const FourVector p = term.ket.p;
    const FourVector q = apply(big, p);
    const Complex phase = std::exp(Complex(0, -minkowski_dot(q, a)));
    const double dilation = std::sqrt(q.t / p.t);
    const Matrix2 w = wigner_rotation(lambda, p, sp.mass, tol);

    if (sp.massless()) {
      const double theta = massless_params(w, std::max(tol, 1e-7)).theta;
      const Complex hel = std::exp(Complex(0, theta * term.ket.sigma.value()));
      out.add({q, term.ket.sigma, sp}, term.amp * phase * dilation * hel);
    } else {
      const HalfInt j = sp.spin_or_helicity;
      const Matrix d = wigner_D(j, w, std::max(tol, 1e-8));
      const int col = weight_index(j, term.ket.sigma);
      for (int row = 0; row < d.rows(); ++row) {
        const HalfInt sig = HalfInt::from_twice(j.twice() - 2 * row);
        out.add({q, sig, sp}, term.amp * phase * dilation * d(row, col));
      }
    }
  }
  return out;
}

double weighted_norm2(const StateVector& state) {
  double total = 0;
  for (const auto& term : state.terms) {
    if (term.ket.p.t <= 0) throw NumericError("weighted_norm2: non-positive energy");
    total += std::norm(term.amp) / term.ket.p.t;
  }
  return total;
}

}  // namespace relrep
