#include "doctest.h"

#include <random>

#include "relrep/error.hpp"
#include "relrep/intertwiner.hpp"
#include "test_helpers.hpp"

using namespace relrep;
using relrep::testing::random_massive_momentum;
using relrep::testing::random_massless_momentum;
using relrep::testing::random_sl2c;

namespace {

RepSum rep(const std::string& text) { return parse_rep_sum(text); }

// Residual of the defining u-condition dD(X) u = u J(X) over the rotation
// generators, evaluated directly from the generator matrices.
double u_condition_residual(HalfInt j, const RepSum& r, const Matrix& u) {
  const GeneratorSet g = generators_sum(r);
  const SpinMatrices s = spin_matrices(j);
  const Matrix spin[3] = {s.j1(), s.j2(), s.j3()};
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, max_abs(g.j[i] * u - u * spin[i]));
  return worst;
}

double v_condition_residual(HalfInt j, const RepSum& r, const Matrix& v) {
  const GeneratorSet g = generators_sum(r);
  const SpinMatrices s = spin_matrices(j);
  const Matrix spin[3] = {s.j1(), s.j2(), s.j3()};
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    worst = std::max(worst, max_abs(g.j[i] * v + v * spin[i].conjugate()));
  return worst;
}

}  // namespace

TEST_CASE("little_algebra_massive_is_the_rotation_algebra") {
  const GeneratorSet g = generators_sum(rep("(1/2,0)+(0,1/2)"));
  const auto gens = little_algebra(true, g);
  REQUIRE((gens.size()) == (3u));
  for (int i = 0; i < 3; ++i) CHECK((max_abs(gens[i] - g.j[i])) == (0.0));
}

TEST_CASE("little_algebra_massless_stabilizes_the_null_momentum") {
  // On the defining rep the three combinations are strictly upper
  // triangular or diagonal, i.e. they preserve the line killed by X(k).
  const GeneratorSet g = generators_AB({HalfInt(0), HalfInt::from_twice(1)});
  const auto gens = little_algebra(false, g);
  REQUIRE((gens.size()) == (3u));
  // J2 - K1 = -i e_{01}, -J1 - K2 = -e_{01}, J3 = sigma3/2.
  Matrix e01 = Matrix::Zero(2, 2);
  e01(0, 1) = 1.0;
  CHECK((max_abs(gens[0] - Complex(0, -1) * e01)) < (1e-15));
  CHECK((max_abs(gens[1] + e01)) < (1e-15));
  CHECK((max_abs(gens[2] - 0.5 * Matrix(relrep::testing::pauli_matrix(3)))) < (1e-15));
}

TEST_CASE("compatibility_counts_coupling_blocks") {
  CHECK((compatibility(HalfInt(0), rep("(0,0)"))) == (1));
  CHECK((compatibility(HalfInt(0), rep("(1/2,1/2)"))) == (1));
  CHECK((compatibility(HalfInt(0), rep("(1,0)"))) == (0));
  CHECK((compatibility(HalfInt::from_twice(1), rep("(1/2,0)+(0,1/2)"))) == (2));
  CHECK((compatibility(HalfInt(1), rep("(1/2,1/2)"))) == (1));
  CHECK((compatibility(HalfInt(1), rep("(1,0)+(0,1)"))) == (2));
  CHECK((compatibility(HalfInt(1), rep("(1,1)"))) == (1));
  CHECK((compatibility(HalfInt(2), rep("(1/2,1/2)"))) == (0));
  CHECK((compatibility(HalfInt::from_twice(3), rep("(1,1/2)"))) == (1));
}

TEST_CASE("solve_u_zero_dimension_matches_compatibility") {
  const std::vector<std::string> reps = {
      "(0,0)", "(1/2,0)", "(0,1/2)", "(1/2,1/2)", "(1,0)+(0,1)",
      "(1/2,0)+(0,1/2)", "(1,1)", "(1,1/2)", "(3/2,3/2)",
      "(0,0)+(1/2,1/2)+(1,1)"};
  for (const auto& text : reps) {
    const RepSum r = rep(text);
    for (int tj = 0; tj <= 6; ++tj) {
      const HalfInt j = HalfInt::from_twice(tj);
      const auto basis = solve_u_zero(j, r);
      CHECK((static_cast<int>(basis.size())) == (compatibility(j, r)));
      for (const auto& u : basis) {
        CHECK((u_condition_residual(j, r, u.entries)) < (1e-10));
        CHECK((std::abs(u.entries.norm() - 1.0)) < (1e-10));
      }
      // Orthonormal under the Frobenius inner product.
      for (std::size_t a = 0; a + 1 < basis.size(); ++a) {
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
          const Complex overlap = (basis[a].entries.adjoint() * basis[b].entries).trace();
          CHECK((std::abs(overlap)) < (1e-10));
        }
      }
    }
  }
}

TEST_CASE("solve_v_zero_solves_the_conjugate_condition") {
  const RepSum dirac = rep("(1/2,0)+(0,1/2)");
  const HalfInt half = HalfInt::from_twice(1);
  const auto basis = solve_v_zero(half, dirac);
  REQUIRE((basis.size()) == (2u));
  for (const auto& v : basis) {
    CHECK((v.kind) == (CoefficientTensor::Kind::V));
    CHECK((v_condition_residual(half, dirac, v.entries)) < (1e-10));
  }
}

TEST_CASE("v_from_u_is_the_weight_flip") {
  const RepSum r = rep("(1/2,1/2)");
  const HalfInt j = HalfInt(1);
  for (const auto& u : solve_u_zero(j, r)) {
    const CoefficientTensor v = v_from_u(j, u);
    CHECK((v.kind) == (CoefficientTensor::Kind::V));
    CHECK((v_condition_residual(j, r, v.entries)) < (1e-10));
    // Entrywise: v_{l,sigma} = (-1)^{j+sigma} u_{l,-sigma}.
    const int dim = static_cast<int>(u.entries.rows());
    const int cols = static_cast<int>(u.entries.cols());
    for (int l = 0; l < dim; ++l) {
      for (int c = 0; c < cols; ++c) {
        const HalfInt sigma = HalfInt::from_twice(j.twice() - 2 * c);
        const int flip = weight_index(j, -sigma);
        const double sign = parity_sign(j + sigma);
        CHECK((std::abs(v.entries(l, c) - sign * u.entries(l, flip))) < (1e-14));
      }
    }
  }
}

TEST_CASE("conjugation_matrix_conjugates_the_spin_matrices") {
  for (int tj = 0; tj <= 6; ++tj) {
    const HalfInt j = HalfInt::from_twice(tj);
    const Matrix c = conjugation_matrix(j);
    const SpinMatrices s = spin_matrices(j);
    const Matrix cinv = c.inverse();
    const Matrix spin[3] = {s.j1(), s.j2(), s.j3()};
    for (int i = 0; i < 3; ++i) {
      CHECK((max_abs(Matrix(-spin[i].conjugate()) - c * spin[i] * cinv)) < (1e-12));
    }
  }
}

TEST_CASE("cg_intertwiner_lies_in_the_solution_space") {
  for (int ta = 0; ta <= 2; ++ta) {
    for (int tb = 0; tb <= 2; ++tb) {
      const HalfInt A = HalfInt::from_twice(ta);
      const HalfInt B = HalfInt::from_twice(tb);
      for (const HalfInt j : couple_range(A, B)) {
        const CoefficientTensor u0 = cg_intertwiner(A, B, j, 2.0);
        const RepSum r{{RepLabel{A, B}}};
        CHECK((u_condition_residual(j, r, u0.entries)) < (1e-12));
        // Normalized like the rest-frame states: entries scale as (2m)^(-1/2).
        CHECK((std::abs(u0.entries.norm() -
                        std::sqrt((j.twice() + 1.0) / 4.0))) < (1e-12));
      }
    }
  }
  const CoefficientTensor scalar = cg_intertwiner(HalfInt(0), HalfInt(0), HalfInt(0), 2.0);
  CHECK((std::abs(scalar.entries(0, 0) - 0.5)) < (1e-15));
}

TEST_CASE("cg_intertwiner_rejects_uncoupled_spins") {
  CHECK_THROWS_AS(cg_intertwiner(HalfInt(0), HalfInt(0), HalfInt(1), 1.0), NumericError);
  CHECK_THROWS_AS(cg_intertwiner(HalfInt(1), HalfInt(0), HalfInt(0), 0.0), NumericError);
}

TEST_CASE("boost_coefficients_of_the_scalar_is_the_normalization") {
  const FieldSpec spec{rep("(0,0)"),
                       SpeciesDescriptor{"s", 2.0, HalfInt(0), Statistics::Bose}};
  const CoefficientTensor u0 = cg_intertwiner(HalfInt(0), HalfInt(0), HalfInt(0), 2.0);
  std::mt19937_64 rng(7401);
  for (int trial = 0; trial < 10; ++trial) {
    const FourVector p = random_massive_momentum(rng, 2.0);
    const CoefficientTensor up = boost_coefficients(spec, u0, p);
    REQUIRE(up.momentum.has_value());
    CHECK(((*up.momentum - p).max_abs()) < (1e-12));
    // u(p) = sqrt(m/p0) (2m)^{-1/2} = (2 p0)^{-1/2}.
    CHECK((std::abs(up.entries(0, 0) - 1.0 / std::sqrt(2.0 * p.t))) < (1e-12));
  }
}

TEST_CASE("covariance_residual_vanishes_for_true_intertwiners") {
  std::mt19937_64 rng(7402);
  struct Case {
    std::string rep_text;
    HalfInt A, B, j;
  };
  const std::vector<Case> cases = {
      {"(0,0)", HalfInt(0), HalfInt(0), HalfInt(0)},
      {"(1/2,1/2)", HalfInt::from_twice(1), HalfInt::from_twice(1), HalfInt(0)},
      {"(1/2,1/2)", HalfInt::from_twice(1), HalfInt::from_twice(1), HalfInt(1)},
      {"(1,1/2)", HalfInt(1), HalfInt::from_twice(1), HalfInt::from_twice(3)},
  };
  for (const auto& c : cases) {
    const FieldSpec spec{rep(c.rep_text),
                         SpeciesDescriptor{"x", 1.3, c.j, Statistics::Bose}};
    const CoefficientTensor u0 = cg_intertwiner(c.A, c.B, c.j, 1.3);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix2 lambda = random_sl2c(rng, 0.6);
      const FourVector p = random_massive_momentum(rng, 1.3);
      CHECK((covariance_residual(spec, u0, lambda, p)) < (1e-8));
      const CoefficientTensor v0 = v_from_u(c.j, u0);
      CHECK((covariance_residual(spec, v0, lambda, p)) < (1e-8));
    }
  }
}

TEST_CASE("covariance_residual_for_the_dirac_pair") {
  const RepSum dirac = rep("(1/2,0)+(0,1/2)");
  const HalfInt half = HalfInt::from_twice(1);
  const FieldSpec spec{dirac, SpeciesDescriptor{"e", 1.0, half, Statistics::Fermi}};
  std::mt19937_64 rng(7403);
  for (const auto& u0 : solve_u_zero(half, dirac)) {
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix2 lambda = random_sl2c(rng, 0.6);
      const FourVector p = random_massive_momentum(rng, 1.0);
      CHECK((covariance_residual(spec, u0, lambda, p)) < (1e-8));
    }
  }
  for (const auto& v0 : solve_v_zero(half, dirac)) {
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix2 lambda = random_sl2c(rng, 0.6);
      const FourVector p = random_massive_momentum(rng, 1.0);
      CHECK((covariance_residual(spec, v0, lambda, p)) < (1e-8));
    }
  }
}

TEST_CASE("covariance_residual_detects_perturbed_tensors") {
  const RepSum r = rep("(1/2,1/2)");
  const HalfInt j = HalfInt(1);
  const FieldSpec spec{r, SpeciesDescriptor{"w", 1.0, j, Statistics::Bose}};
  CoefficientTensor u0 = cg_intertwiner(HalfInt::from_twice(1), HalfInt::from_twice(1),
                                        j, 1.0);
  u0.entries(0, 2) += 1e-3;
  std::mt19937_64 rng(7404);
  const Matrix2 lambda = random_sl2c(rng, 0.6);
  const FourVector p = random_massive_momentum(rng, 1.0);
  CHECK((covariance_residual(spec, u0, lambda, p)) > (1e-4));
}

TEST_CASE("solve_massless_exists_only_at_the_selected_helicity") {
  for (int ta = 0; ta <= 2; ++ta) {
    for (int tb = 0; tb <= 2; ++tb) {
      const RepLabel label{HalfInt::from_twice(ta), HalfInt::from_twice(tb)};
      for (int ts = -4; ts <= 4; ++ts) {
        const HalfInt sigma = HalfInt::from_twice(ts);
        const auto u = solve_massless(CoefficientTensor::Kind::U, sigma, label);
        const auto v = solve_massless(CoefficientTensor::Kind::V, sigma, label);
        CHECK((u.has_value()) == (sigma == label.B - label.A));
        CHECK((v.has_value()) == (sigma == label.A - label.B));
        if (u) {
          CHECK((std::abs(u->entries.norm() - 1.0)) < (1e-12));
          // Support on the single weight (a,b) = (-A, B): the last a-block,
          // first b-slot.
          const int idx = ta * (tb + 1);
          CHECK((std::abs(u->entries(idx, 0) - 1.0)) < (1e-12));
        }
      }
    }
  }
}

TEST_CASE("photon_vector_potential_has_no_covariant_coefficients") {
  // The (1/2,1/2) block admits massless solutions only at helicity zero:
  // helicity +-1 is obstructed.
  const RepLabel vec{HalfInt::from_twice(1), HalfInt::from_twice(1)};
  CHECK_FALSE(solve_massless(CoefficientTensor::Kind::U, HalfInt(1), vec).has_value());
  CHECK_FALSE(solve_massless(CoefficientTensor::Kind::U, HalfInt(-1), vec).has_value());
  CHECK(solve_massless(CoefficientTensor::Kind::U, HalfInt(0), vec).has_value());
  // Helicity +-1 does fit in the field-strength blocks (1,0) and (0,1).
  CHECK(solve_massless(CoefficientTensor::Kind::U, HalfInt(1),
                       RepLabel{HalfInt(0), HalfInt(1)})
            .has_value());
  CHECK(solve_massless(CoefficientTensor::Kind::U, HalfInt(-1),
                       RepLabel{HalfInt(1), HalfInt(0)})
            .has_value());
}

TEST_CASE("massless_covariance_residual_vanishes_on_solutions") {
  std::mt19937_64 rng(7405);
  struct Case {
    RepLabel label;
    HalfInt sigma;
    CoefficientTensor::Kind kind;
  };
  const std::vector<Case> cases = {
      {{HalfInt(0), HalfInt::from_twice(1)}, HalfInt::from_twice(1),
       CoefficientTensor::Kind::U},
      {{HalfInt::from_twice(1), HalfInt(0)}, HalfInt::from_twice(-1),
       CoefficientTensor::Kind::U},
      {{HalfInt(0), HalfInt(1)}, HalfInt(1), CoefficientTensor::Kind::U},
      {{HalfInt(1), HalfInt(0)}, HalfInt(1), CoefficientTensor::Kind::V},
  };
  for (const auto& c : cases) {
    const auto w0 = solve_massless(c.kind, c.sigma, c.label);
    REQUIRE(w0.has_value());
    for (int trial = 0; trial < 8; ++trial) {
      const Matrix2 lambda = random_sl2c(rng, 0.5);
      const FourVector p = random_massless_momentum(rng);
      CHECK((massless_covariance_residual(c.label, c.sigma, *w0, lambda, p)) < (1e-8));
    }
  }
}

TEST_CASE("massless_covariance_residual_detects_perturbations") {
  const RepLabel label{HalfInt(0), HalfInt(1)};
  auto u0 = solve_massless(CoefficientTensor::Kind::U, HalfInt(1), label);
  REQUIRE(u0.has_value());
  u0->entries(1, 0) += 1e-3;
  std::mt19937_64 rng(7406);
  const Matrix2 lambda = random_sl2c(rng, 0.5);
  const FourVector p = random_massless_momentum(rng);
  CHECK((massless_covariance_residual(label, HalfInt(1), *u0, lambda, p)) > (1e-4));
}
