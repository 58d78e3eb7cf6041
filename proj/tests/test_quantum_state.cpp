#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracle.hpp"
#include "sqwva/errors.hpp"
#include "sqwva/quantum_state.hpp"

using namespace sqwva;

TEST_CASE("db_to_r: examples and round trip") {
  CHECK(qs::db_to_r(0.0) == 0.0);
  CHECK(std::exp(-2.0 * qs::db_to_r(2.0)) == doctest::Approx(std::pow(10.0, -0.2)).epsilon(1e-14));
  CHECK(qs::db_to_r(2.0) == doctest::Approx(0.230258509299404568).epsilon(1e-15));
  for (double db : {0.0, 0.5, 2.0, 3.0, 10.0, 15.0}) {
    CHECK(std::abs(qs::r_to_db(qs::db_to_r(db)) - db) < 1e-12);
  }
  CHECK_THROWS_AS(qs::db_to_r(-1.0), DomainError);
  CHECK_THROWS_AS(qs::r_to_db(-0.1), DomainError);
}

TEST_CASE("quadrature_variance: examples") {
  const qs::QuadratureState coh = qs::QuadratureState::coherent(3.0);
  for (double psi : {0.0, 0.3, 1.7, 4.0}) CHECK(qs::quadrature_variance(coh, psi) == doctest::Approx(1.0).epsilon(1e-15));

  const qs::QuadratureState sq = qs::QuadratureState::squeezed_vacuum(qs::db_to_r(2.0), 0.4);
  CHECK(qs::quadrature_variance(sq, 0.4) == doctest::Approx(0.6309573444801932).epsilon(1e-13));
  CHECK(qs::quadrature_variance(sq, 0.4 + std::numbers::pi / 2) == doctest::Approx(1.5848931924611136).epsilon(1e-13));
}

TEST_CASE("quadrature_variance: phase average equals cosh 2r") {
  for (double r : {0.0, 0.23, 0.7, 1.2}) {
    const qs::QuadratureState s = qs::QuadratureState::squeezed_vacuum(r, 0.9);
    const double avg = oracle::simpson([&](double psi) { return qs::quadrature_variance(s, psi); }, 0.0,
                                       2.0 * std::numbers::pi, 2000) /
                       (2.0 * std::numbers::pi);
    CHECK(std::abs(avg - std::cosh(2.0 * r)) < 1e-6);
  }
}

TEST_CASE("quadrature_variance: minimum uncertainty") {
  for (double r : {0.0, 0.23, 0.9}) {
    const qs::QuadratureState s = qs::QuadratureState::squeezed_vacuum(r, -0.3);
    const double at = qs::quadrature_variance(s, -0.3) * qs::quadrature_variance(s, -0.3 + std::numbers::pi / 2);
    CHECK(std::abs(at - 1.0) < 1e-12);
    for (double psi : {0.1, 0.5, 1.0, 2.0}) {
      CHECK(qs::quadrature_variance(s, psi) * qs::quadrature_variance(s, psi + std::numbers::pi / 2) >= 1.0 - 1e-12);
    }
  }
}

TEST_CASE("with_efficiency") {
  CHECK(qs::with_efficiency(0.5, 1.0) == 0.5);
  CHECK(qs::with_efficiency(0.5, 0.0) == 1.0);
  CHECK(qs::with_efficiency(0.5, 0.5) == doctest::Approx(0.75));
  CHECK_THROWS_AS(qs::with_efficiency(0.5, 1.5), DomainError);
}

TEST_CASE("photon_number_from_power: examples and linearity") {
  const double lambda = 1064e-9;
  CHECK(qs::photon_number_from_power({10e-3}, lambda, 1.0) == doctest::Approx(5.35630002786544270e16).epsilon(1e-13));
  CHECK(qs::photon_number_from_power({260e-6}, lambda, 1.0) == doctest::Approx(1.39263800724501510e15).epsilon(1e-13));
  const double one_photon = qs::constants::planck_h * qs::constants::speed_of_light / lambda;
  CHECK(qs::photon_number_from_power({one_photon}, lambda, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  const double base = qs::photon_number_from_power({1e-3}, lambda, 0.5);
  CHECK(qs::photon_number_from_power({3e-3}, lambda, 0.5) == doctest::Approx(3.0 * base).epsilon(1e-14));
  CHECK(qs::photon_number_from_power({1e-3}, lambda, 2.0) == doctest::Approx(4.0 * base).epsilon(1e-14));
  CHECK_THROWS_AS(qs::photon_number_from_power({0.0}, lambda, 1.0), DomainError);
  CHECK_THROWS_AS(qs::photon_number_from_power({1e-3}, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(qs::photon_number_from_power({1e-3}, lambda, 0.0), DomainError);
  CHECK_THROWS_AS(qs::OpticalPower::from_watts(-1.0), DomainError);
}

TEST_CASE("power_ratio_db") {
  CHECK(qs::power_ratio_db(2.0, 1.0) == doctest::Approx(3.0103).epsilon(1e-5));
  CHECK(qs::power_ratio_db(1.0, 1.0) == 0.0);
  CHECK(qs::power_ratio_db(251.2, 1.0) == doctest::Approx(24.0).epsilon(1e-4));
  CHECK(qs::db_to_power_ratio(qs::power_ratio_db(7.0, 3.0)) == doctest::Approx(7.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(qs::power_ratio_db(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(qs::power_ratio_db(1.0, -1.0), DomainError);
}

TEST_CASE("QuadratureState::validate") {
  CHECK_NOTHROW(qs::QuadratureState::squeezed_vacuum(0.3).validate());
  CHECK_THROWS_AS(qs::QuadratureState::squeezed_vacuum(-0.3).validate(), DomainError);
  CHECK(qs::QuadratureState::coherent(1.0).is_coherent());
}
