#pragma once

#include <string>
#include <variant>
#include <vector>

#include "relrep/half_int.hpp"
#include "relrep/minkowski.hpp"
#include "relrep/state.hpp"

namespace relrep {

/// One-particle mode label: a species, a weight sigma, and either a
/// symbolic momentum name (kept formal) or a numeric on-shell momentum.
struct Mode {
  SpeciesDescriptor species;
  std::variant<std::string, FourVector> label;
  HalfInt sigma;

  static Mode symbolic(const SpeciesDescriptor& species, std::string name,
                       HalfInt sigma = HalfInt(0));
  /// Validates the momentum against the species shell.
  static Mode numeric(const SpeciesDescriptor& species, const FourVector& p,
                      HalfInt sigma);

  bool is_symbolic() const { return std::holds_alternative<std::string>(label); }
  bool fermionic() const { return species.statistics == Statistics::Fermi; }
};

/// Strict total order / equality on modes: (species, label, sigma) with
/// symbolic labels ordered by name before numeric ones.  This is the sort
/// key of the canonical normal form.
bool mode_less(const Mode& a, const Mode& b);
bool mode_equal(const Mode& a, const Mode& b);

std::string to_string(const Mode& m);

/// Formal delta(q, q') factor; unordered, stored with the smaller mode
/// first.  Only appears when at least one side is symbolic.
struct DeltaFactor {
  Mode first, second;
  DeltaFactor(Mode a, Mode b);
};

std::string to_string(const DeltaFactor& d);

/// Ordered multi-particle basis state Phi_{q1 q2 ...}; the vacuum is the
/// empty list.
struct FockState {
  std::vector<Mode> modes;
  std::size_t size() const { return modes.size(); }
};

std::string to_string(const FockState& s);

/// c * (product of formal deltas) * Phi: the shape in which annihilators
/// return their result.
struct WeightedState {
  Complex coeff{1.0, 0.0};
  std::vector<DeltaFactor> deltas;
  FockState state;
};

using StateSum = std::vector<WeightedState>;

/// a^dag(q) Phi_{q1...} = Phi_{q q1...}.
FockState apply_creator(const Mode& q, const FockState& s);

/// a(q) Phi_{q1...qN} = sum_r s_r delta(q, q_r) Phi_{...without r}, where
/// s_r is -1 raised to the number of fermionic modes before position r
/// that share Fermi statistics with q.  Numeric deltas collapse to 0/1;
/// symbolic ones stay as factors (delta(q, q) included).
StateSum apply_annihilator(const Mode& q, const FockState& s, double tol = 1e-8);

/// Normal-ordered word: coeff * deltas * creators * annihilators, each
/// operator block sorted ascending by mode_less.
struct OperatorMonomial {
  Complex coeff{1.0, 0.0};
  std::vector<DeltaFactor> deltas;
  std::vector<Mode> creators;
  std::vector<Mode> annihilators;
};

/// Canonical sum of monomials (sorted, merged, zero terms dropped).  Two
/// equal operators always canonicalise to byte-for-byte identical term
/// lists, so equality of normal forms is meaningful.
struct OperatorSum {
  std::vector<OperatorMonomial> terms;
  bool zero() const { return terms.empty(); }
};

std::string to_string(const OperatorMonomial& m);
std::string to_string(const OperatorSum& s);

/// Single-operator sums, the building blocks for products.
OperatorSum creator(const Mode& q);
OperatorSum annihilator(const Mode& q);
/// The delta(a, b) contraction by itself (possibly collapsed to 0/1).
OperatorSum delta_term(const Mode& a, const Mode& b, double tol = 1e-8);

OperatorSum operator+(const OperatorSum& a, const OperatorSum& b);
OperatorSum operator-(const OperatorSum& a, const OperatorSum& b);
OperatorSum operator*(const Complex& c, const OperatorSum& a);
/// Word concatenation followed by normal ordering.
OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);

/// Rewrites every word into the canonical normal form using
///   a(q') a^dag(q) = delta(q', q) +- a^dag(q) a(q')
/// (+ for Bose, - for Fermi; operators of different species commute unless
/// both are fermionic, and cross-species contractions vanish).
/// Idempotent; OperatorSum values returned by this library are already
/// normal ordered.
OperatorSum normal_order(const OperatorSum& e);

/// Conjugate-transpose: reverses words, swaps creators with annihilators,
/// conjugates coefficients.  An involution.
OperatorSum adjoint(const OperatorSum& e);

/// <s1, s2>: permanent (Bose) or determinant (Fermi) of the pairwise delta
/// matrix, returned as a sum of op-free monomials (a number once every
/// label is numeric).  States of unequal size give zero; mixing Bose and
/// Fermi modes in one state is rejected.
OperatorSum inner_product(const FockState& s1, const FockState& s2, double tol = 1e-8);

/// Extracts the complex value of an op-free, delta-free sum; throws if any
/// formal content survives.
Complex scalar_value(const OperatorSum& e);

/// Applies a normal-ordered operator to a state.
StateSum apply(const OperatorSum& e, const FockState& s, double tol = 1e-8);

/// Op-free part of e: equals <vac| e |vac> for normal-ordered e.
OperatorSum vacuum_expectation(const OperatorSum& e);

/// Lorentz action on a creation operator of a numeric mode:
///
///   U a^dag(p, sigma) U^{-1} = e^{-i q.a} sqrt(q0/p0)
///       sum_{s'} D^(j)_{s' sigma}(W(lambda, p)) a^dag(q, s'),   q = covering(lambda) p
///
/// (helicity phase e^{i theta sigma} for massless species).  Applying the
/// result to the vacuum matches the one-particle transform of |p, sigma>.
OperatorSum transform_creator(const Mode& q, const Matrix2& lambda, const FourVector& a,
                              double tol = 1e-9);

/// Parses "ad(q1)*a(q2) + (0,-1)*ad(1,0,0,1,1/2)" style expressions into a
/// normal-ordered sum.  Mode payloads are either a symbolic name or
/// "t,x,y,z,sigma" with a numeric on-shell momentum; every mode belongs to
/// the given species (massless species adopt the written sigma as their
/// helicity).  Whitespace is insignificant; errors report the offset.
OperatorSum parse_operator_expression(const std::string& text,
                                      const SpeciesDescriptor& species);

}  // namespace relrep
