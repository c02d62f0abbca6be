#pragma once

#include <string>
#include <vector>

#include "relrep/half_int.hpp"
#include "relrep/minkowski.hpp"

namespace relrep {

enum class Statistics { Bose, Fermi };

std::string to_string(Statistics s);

/// Particle species: massive species carry a spin j >= 0, massless species
/// a single fixed helicity.
struct SpeciesDescriptor {
  std::string name;
  double mass = 0;               // 0 means massless
  HalfInt spin_or_helicity;      // spin j if massive, helicity if massless
  Statistics statistics = Statistics::Bose;

  bool massless() const { return mass == 0; }
  friend bool operator==(const SpeciesDescriptor&, const SpeciesDescriptor&) = default;
};

/// Throws unless the descriptor is usable (mass >= 0; massive spin >= 0).
void validate(const SpeciesDescriptor& s);

/// Basis ket |p, sigma> of one species.  The momentum must lie on the
/// species' positive shell; sigma ranges over j, j-1, ..., -j for massive
/// species and equals the fixed helicity for massless ones.
struct Ket {
  FourVector p;
  HalfInt sigma;
  SpeciesDescriptor species;
};

void validate(const Ket& k, double tol = 1e-7);

/// Finite complex combination of kets; terms with coinciding (p, sigma)
/// within tolerance are merged.
struct StateVector {
  struct Term {
    Ket ket;
    Complex amp;
  };
  std::vector<Term> terms;

  /// Adds amp * |ket>, merging into an existing term when the ket matches.
  void add(const Ket& ket, Complex amp, double tol = 1e-8);
};

/// sqrt(M/p0) for massive species, sqrt(1/p0) for massless: the factor that
/// makes the transformation law below unitary with respect to the
/// invariant measure.
double normalization(const SpeciesDescriptor& s, const FourVector& p);

/// Induced unitary of the Poincare cover on one-particle states:
///
///   U(lambda, a) |p, sigma> =
///     e^{-i p'.a} sqrt(p'0 / p0) sum_{s'} D^(j)_{s' sigma}(W(lambda, p)) |p', s'>
///
/// with p' = covering(lambda) p and, for massless species, the phase
/// e^{i theta sigma} built from the little-group angle of W(lambda, p)
/// instead of the D-matrix sum.  Applying two transforms in succession
/// equals applying their semidirect product (lambda2 lambda1,
/// covering(lambda2) a1 + a2).
StateVector transform(const StateVector& state, const Matrix2& lambda,
                      const FourVector& a, double tol = 1e-9);

/// sum |amp|^2 / p0; invariant under transform.
double weighted_norm2(const StateVector& state);

}  // namespace relrep
