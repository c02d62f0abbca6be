#include "doctest.h"

#include <random>

#include "relrep/error.hpp"
#include "relrep/state.hpp"
#include "test_helpers.hpp"

using namespace relrep;
using relrep::testing::random_massive_momentum;
using relrep::testing::random_massless_momentum;
using relrep::testing::random_sl2c;
using relrep::testing::su2_from_axis_angle;

namespace {

const SpeciesDescriptor kElectron{"e", 1.0, HalfInt::from_twice(1), Statistics::Fermi};
const SpeciesDescriptor kVectorBoson{"w", 2.0, HalfInt(1), Statistics::Bose};
const SpeciesDescriptor kPhotonPlus{"ph", 0.0, HalfInt(1), Statistics::Bose};

Complex amp_at(const StateVector& s, const FourVector& p, HalfInt sigma) {
  for (const auto& t : s.terms) {
    if ((t.ket.p - p).max_abs() < 1e-6 && t.ket.sigma == sigma) return t.amp;
  }
  return Complex(0, 0);
}

FourVector random_translation(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  return {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
}

}  // namespace

TEST_CASE("species_validation_rejects_bad_descriptors") {
  CHECK_NOTHROW(validate(kElectron));
  CHECK_NOTHROW(validate(kPhotonPlus));
  SpeciesDescriptor bad = kElectron;
  bad.mass = -1.0;
  CHECK_THROWS_AS(validate(bad), NumericError);
  bad = kElectron;
  bad.spin_or_helicity = HalfInt::from_twice(-1);
  CHECK_THROWS_AS(validate(bad), NumericError);
  // Negative helicity is fine for a massless species.
  SpeciesDescriptor minus = kPhotonPlus;
  minus.spin_or_helicity = HalfInt(-1);
  CHECK_NOTHROW(validate(minus));
  CHECK((to_string(Statistics::Bose)) == ("bose"));
  CHECK((to_string(Statistics::Fermi)) == ("fermi"));
}

TEST_CASE("ket_validation_enforces_shell_and_weight_range") {
  Ket good{{std::sqrt(2.0), 1, 0, 0}, HalfInt::from_twice(1), kElectron};
  CHECK_NOTHROW(validate(good));
  Ket off_shell = good;
  off_shell.p.t = 2.0;
  CHECK_THROWS_AS(validate(off_shell), NumericError);
  Ket bad_weight = good;
  bad_weight.sigma = HalfInt::from_twice(3);
  CHECK_THROWS_AS(validate(bad_weight), NumericError);
  Ket negative_energy = good;
  negative_energy.p.t = -std::sqrt(2.0);
  CHECK_THROWS_AS(validate(negative_energy), NumericError);
  // Massless kets must carry exactly the species helicity.
  Ket photon{{1, 0, 0, 1}, HalfInt(1), kPhotonPlus};
  CHECK_NOTHROW(validate(photon));
  photon.sigma = HalfInt(-1);
  CHECK_THROWS_AS(validate(photon), NumericError);
}

TEST_CASE("state_vector_add_merges_matching_kets") {
  StateVector s;
  const Ket k1{{std::sqrt(2.0), 1, 0, 0}, HalfInt::from_twice(1), kElectron};
  const Ket k2{{std::sqrt(2.0), 0, 1, 0}, HalfInt::from_twice(1), kElectron};
  s.add(k1, Complex(0.5, 0));
  s.add(k2, Complex(0, 1));
  s.add(k1, Complex(0.25, 0));
  REQUIRE((s.terms.size()) == (2u));
  CHECK((std::abs(s.terms[0].amp - Complex(0.75, 0))) < (1e-15));
  // Same momentum but different weight stays separate.
  Ket k3 = k1;
  k3.sigma = HalfInt::from_twice(-1);
  s.add(k3, Complex(1, 0));
  CHECK((s.terms.size()) == (3u));
}

TEST_CASE("normalization_factors_match_the_measure") {
  const FourVector p{2.0, 0, 0, std::sqrt(3.0)};
  CHECK((std::abs(normalization(kElectron, p) - std::sqrt(0.5))) < (1e-14));
  const FourVector q{4.0, 0, 0, 4.0};
  CHECK((std::abs(normalization(kPhotonPlus, q) - 0.5)) < (1e-14));
}

TEST_CASE("rest_frame_rotation_acts_by_the_spin_matrix") {
  // At the rest momentum the little-group element is the rotation itself,
  // so a z-rotation multiplies |k, sigma> by e^{-i chi sigma}.
  const double chi = 0.8;
  const Matrix2 lambda = su2_from_axis_angle(chi, 0, 0, 1);
  StateVector s;
  const Ket up{{1, 0, 0, 0}, HalfInt::from_twice(1), kElectron};
  s.add(up, Complex(1, 0));
  const StateVector out = transform(s, lambda, FourVector{});
  REQUIRE((out.terms.size()) >= (1u));
  const Complex got = amp_at(out, up.p, up.sigma);
  const Complex expect = std::exp(Complex(0, -0.5 * chi));
  CHECK((std::abs(got - expect)) < (1e-12));
  CHECK((std::abs(amp_at(out, up.p, HalfInt::from_twice(-1)))) < (1e-12));
}

TEST_CASE("translation_multiplies_by_the_plane_wave_phase") {
  const FourVector p{std::sqrt(6.0), 1, 2, 0};
  StateVector s;
  const Ket ket{p, HalfInt(0), SpeciesDescriptor{"s", 1.0, HalfInt(0), Statistics::Bose}};
  s.add(ket, Complex(1, 0));
  const FourVector a{1, 0, 0, 0};
  const StateVector out = transform(s, Matrix2::Identity(), a);
  // Phase e^{-i p.a} with p.a = -p0 a0.
  const Complex expect = std::exp(Complex(0, std::sqrt(6.0)));
  CHECK((std::abs(amp_at(out, p, HalfInt(0)) - expect)) < (1e-12));
}

TEST_CASE("standard_boost_moves_the_rest_ket_with_unit_wigner_rotation") {
  const FourVector p{std::sqrt(6.0), 1, 2, 0};
  const Matrix2 l = standard_boost_massive(p, 1.0);
  StateVector s;
  s.add(Ket{{1, 0, 0, 0}, HalfInt(0), SpeciesDescriptor{"s", 1.0, HalfInt(0),
                                                        Statistics::Bose}},
        Complex(1, 0));
  const StateVector out = transform(s, l, FourVector{});
  REQUIRE((out.terms.size()) == (1u));
  CHECK(((out.terms[0].ket.p - p).max_abs()) < (1e-12));
  CHECK((std::abs(out.terms[0].amp - std::sqrt(std::sqrt(6.0)))) < (1e-12));
}

TEST_CASE("massless_rotation_about_the_momentum_gives_helicity_phase") {
  const double chi = 1.1;
  const Matrix2 lambda = su2_from_axis_angle(chi, 0, 0, 1);
  StateVector s;
  const Ket ket{{1, 0, 0, 1}, HalfInt(1), kPhotonPlus};
  s.add(ket, Complex(1, 0));
  const StateVector out = transform(s, lambda, FourVector{});
  REQUIRE((out.terms.size()) == (1u));
  // Little-group angle of exp(-i chi sigma3/2) is -chi; helicity 1 picks up
  // e^{i theta sigma} = e^{-i chi}.
  const Complex expect = std::exp(Complex(0, -chi));
  CHECK((std::abs(out.terms[0].amp - expect)) < (1e-12));
  CHECK(((out.terms[0].ket.p - ket.p).max_abs()) < (1e-12));
}

TEST_CASE("transform_composition_matches_the_semidirect_product") {
  std::mt19937_64 rng(7301);
  for (int trial = 0; trial < 15; ++trial) {
    const Matrix2 l1 = random_sl2c(rng, 0.5);
    const Matrix2 l2 = random_sl2c(rng, 0.5);
    const FourVector a1 = random_translation(rng);
    const FourVector a2 = random_translation(rng);

    StateVector s;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < 3; ++t) {
      s.add(Ket{random_massive_momentum(rng, 2.0),
                HalfInt::from_twice(2 - 2 * t), kVectorBoson},
            Complex(gauss(rng), gauss(rng)));
    }

    const StateVector lhs = transform(transform(s, l1, a1), l2, a2);
    const FourVector a12 = apply(covering(l2), a1) + a2;
    const StateVector rhs = transform(s, Matrix2(l2 * l1), a12);
    REQUIRE((lhs.terms.size()) == (rhs.terms.size()));
    for (const auto& term : rhs.terms) {
      const Complex got = amp_at(lhs, term.ket.p, term.ket.sigma);
      CHECK((std::abs(got - term.amp)) < (1e-8));
    }
  }
}

TEST_CASE("transform_composition_holds_for_massless_species") {
  std::mt19937_64 rng(7302);
  SpeciesDescriptor neutrino{"nu", 0.0, HalfInt::from_twice(-1), Statistics::Fermi};
  for (int trial = 0; trial < 15; ++trial) {
    const Matrix2 l1 = random_sl2c(rng, 0.5);
    const Matrix2 l2 = random_sl2c(rng, 0.5);
    const FourVector a1 = random_translation(rng);
    const FourVector a2 = random_translation(rng);

    StateVector s;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < 3; ++t) {
      s.add(Ket{random_massless_momentum(rng), neutrino.spin_or_helicity, neutrino},
            Complex(gauss(rng), gauss(rng)));
    }

    const StateVector lhs = transform(transform(s, l1, a1), l2, a2);
    const FourVector a12 = apply(covering(l2), a1) + a2;
    const StateVector rhs = transform(s, Matrix2(l2 * l1), a12);
    REQUIRE((lhs.terms.size()) == (rhs.terms.size()));
    for (const auto& term : rhs.terms) {
      const Complex got = amp_at(lhs, term.ket.p, term.ket.sigma);
      CHECK((std::abs(got - term.amp)) < (1e-8));
    }
  }
}

TEST_CASE("weighted_norm_is_invariant_under_transform") {
  std::mt19937_64 rng(7303);
  StateVector s;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < 4; ++t) {
    s.add(Ket{random_massive_momentum(rng, kElectron.mass),
              HalfInt::from_twice(t % 2 == 0 ? 1 : -1), kElectron},
          Complex(gauss(rng), gauss(rng)));
  }
  const double before = weighted_norm2(s);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix2 l = random_sl2c(rng, 0.7);
    const StateVector out = transform(s, l, random_translation(rng));
    CHECK((std::abs(weighted_norm2(out) - before) / before) < (1e-10));
  }
}
