#pragma once

#include <string>
#include <vector>

#include "relrep/half_int.hpp"
#include "relrep/linalg.hpp"
#include "relrep/su2.hpp"

namespace relrep {

/// Irreducible label (A, B); dimension (2A+1)(2B+1).
struct RepLabel {
  HalfInt A, B;
  int dim() const {
    return (static_cast<int>(A.twice()) + 1) * (static_cast<int>(B.twice()) + 1);
  }
  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

/// Finite direct sum of irreducible labels, kept in the given order.
struct RepSum {
  std::vector<RepLabel> parts;
  int dim() const {
    int n = 0;
    for (const auto& p : parts) n += p.dim();
    return n;
  }
  friend bool operator==(const RepSum&, const RepSum&) = default;
};

/// Parse "(1/2,0)" or "(1/2,0)+(0,1/2)"; inverse of to_string(RepSum).
RepSum parse_rep_sum(const std::string& text);
std::string to_string(const RepLabel& label);
std::string to_string(const RepSum& rep);

/// Rotation and boost generators of a (sum of) (A,B) representation(s).
/// They satisfy
///   [J_i, J_j] = i eps_ijk J_k
///   [J_i, K_j] = i eps_ijk K_k
///   [K_i, K_j] = -i eps_ijk J_k
/// with J Hermitian and K anti-Hermitian.
struct GeneratorSet {
  RepSum rep;
  Matrix j[3];
  Matrix k[3];
  int dim() const { return static_cast<int>(j[0].rows()); }
};

/// Generators of the irreducible (A, B) block on the product basis
/// |a, b> ordered with a outer / b inner, both descending:
///   J_i = J_i^(A) (x) 1 + 1 (x) J_i^(B)
///   K_i = -i (J_i^(A) (x) 1 - 1 (x) J_i^(B))
/// The defining 2x2 representation of SL(2,C) is (0, 1/2): there
/// J = sigma/2 and K = +i sigma/2.
GeneratorSet generators_AB(const RepLabel& label);

/// Block-diagonal direct sum, blocks in the listed order.
GeneratorSet generators_sum(const RepSum& rep);

/// Representation matrix of lambda in SL(2,C): lambda is split into its
/// polar factors u e^h (u special unitary, h Hermitian traceless) and each
/// factor is pushed through the exponentiated generators.  For
/// generators_AB((0,1/2)) this returns lambda itself.  Non-unimodular
/// input is rejected.
Matrix exp_rep(const GeneratorSet& gens, const Matrix2& lambda, double tol = 1e-8);

/// Whether the representation descends from the cover to the Lorentz
/// group itself: linear when every A+B is an integer, projective (defined
/// up to sign) when every A+B is half-odd, neither otherwise.
enum class DescentClass { Linear, Projective, CoverOnly };

DescentClass descent_classification(const RepSum& rep);
std::string to_string(DescentClass c);

}  // namespace relrep
