#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "rydcav/errors.hpp"
#include "rydcav/potential.hpp"
#include "rydcav/units.hpp"

using namespace rydcav;
using doctest::Approx;

namespace {

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

PhysicalParams with_half_wavelength_volume(PhysicalParams p) {
  const double half = 0.5 * units::wavelength_um(p.omega_cav);
  p.mode_volume = half * half * half;
  return p;
}

PhysicalParams row12d() {
  return with_half_wavelength_volume(PhysicalParams::from_detunings(
      units::angular_from_hz(1.7e12), units::angular_from_hz(0.12e9), units::angular_from_hz(31e9), 100.0, 100.0, 1.0));
}

// Random equal-dipole draw in the microwave range used by the regime tests.
PhysicalParams random_params(std::mt19937_64& rng, bool positive_branch) {
  std::uniform_real_distribution<double> wd(0.2e12, 3e12), d(0.02e9, 2e9), D(1e9, 50e9), mu(20, 600),
      vol(1e5, 1e8);
  std::bernoulli_distribution sign(0.5);
  const double delta = units::angular_from_hz(d(rng)) * (positive_branch || sign(rng) ? 1 : -1);
  const double Delta = units::angular_from_hz(D(rng)) * (positive_branch || sign(rng) ? 1 : -1);
  const double m = mu(rng);
  return PhysicalParams::from_detunings(units::angular_from_hz(wd(rng)), delta, Delta, m, m, vol(rng));
}

}  // namespace

TEST_SUITE("potential") {
  TEST_CASE("coefficients against the SI oracle") {
    // mpmath, tests/oracles/potential_oracle.py
    SUBCASE("equal dipoles") {
      const auto c = coefficients(row12d());
      CHECK(rel_close(c.C0, 0.16839240043293463327, 1e-11));
      CHECK(rel_close(c.C3, 1.3022500037570558966, 1e-11));
      CHECK(rel_close(c.C6, 0.038535857807834557614, 1e-11));
      CHECK(rel_close(c.R, 1.5675575074021695382, 1e-11));
      CHECK(rel_close(c.r0, 0.096175379792493387021, 1e-11));
      CHECK(rel_close(c.r1, 0.30930733645942004736, 1e-11));
      CHECK(rel_close(c.r2_numeric, 1.9800435663317246859, 1e-10));
    }
    SUBCASE("unequal dipoles, negative cavity detuning") {
      const auto p = PhysicalParams::from_detunings(units::angular_from_hz(0.5e12), units::angular_from_hz(-0.8e9),
                                                    units::angular_from_hz(3.5e9), 220.0, 140.0, 2.5e9);
      const auto c = coefficients(p);
      CHECK(rel_close(cavity_coupling(p, Transition::a), 1.5312949641123915767, 1e-12));
      CHECK(rel_close(cavity_coupling(p, Transition::b), 0.9744604317078855488, 1e-12));
      CHECK(rel_close(c.C0, -7.8572906149043166641e-11, 1e-10));
      CHECK(rel_close(c.C3, 0.000044846979539555571226, 1e-10));
      CHECK(rel_close(c.C6, 3.2378752590729983337, 1e-11));
      CHECK(rel_close(c.R, 68.242029970042616515, 1e-11));
      CHECK(rel_close(c.r0, 0.28952008569985863747, 1e-11));
      CHECK(rel_close(c.r2_numeric, 85.979570046813493304, 1e-9));
    }
  }

  TEST_CASE("equal-dipole coefficients reduce to the compact forms") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
      const auto p = random_params(rng, false);
      const auto c = coefficients(p);
      const double g = cavity_coupling(p, Transition::a);
      const double d = p.cavity_detuning(), D = p.forster_detuning();
      const double K = p.mu_a * p.mu_a * units::dipole_dipole_scale;
      CHECK(rel_close(c.C0, 2 * std::pow(g, 4) * (1 / D + 1 / d) / (d * d), 1e-12));
      CHECK(rel_close(c.C3, 2 * K * g * g / d * (2 / D + 1 / d), 1e-12));
      CHECK(rel_close(c.C6, 2 * K * K / D, 1e-12));
      CHECK(rel_close(c.eta * c.C3 * c.C3, c.C6, 1e-12));
      CHECK(c.C6 * D > 0.0);
      CHECK(rel_close(std::abs(c.C3) / std::pow(c.r1, 3), std::abs(c.C6) / std::pow(c.r1, 6), 1e-10));
    }
  }

  TEST_CASE("zero dipoles give zero coefficients") {
    auto p = row12d();
    p.mu_a = p.mu_b = 0.0;
    const auto c = coefficients(p);
    CHECK(c.C0 == 0.0);
    CHECK(c.C3 == 0.0);
    CHECK(c.C6 == 0.0);
  }

  TEST_CASE("zero detuning is a domain error") {
    auto p = row12d();
    p.omega_cav = p.omega_d;
    CHECK_THROWS_AS(coefficients(p), DomainError);
    p = row12d();
    p.omega_p = 2 * p.omega_d;
    CHECK_THROWS_AS(coefficients(p), DomainError);
  }

  TEST_CASE("12D row within an order of magnitude of the listed values") {
    const auto c = coefficients(row12d());
    for (auto [got, want] : {std::pair{units::mhz_from_angular(c.C0), 1.3e-2}, std::pair{units::mhz_from_angular(c.C3), 0.1},
                             std::pair{units::mhz_from_angular(c.C6), 3e-3}}) {
      CHECK(got / want > 0.1);
      CHECK(got / want < 10.0);
    }
  }

  TEST_CASE("u_tilde") {
    const auto c = PotentialCoefficients::direct(1.0, 8.0, 16.0);
    CHECK(u_tilde(1.0, units::pi / 2, c, AngularMode::angular) == Approx(25.0).epsilon(1e-15));
    CHECK(u_tilde(1.0, 0.3, c, AngularMode::isotropic) == 25.0);
    CHECK(rel_close(u_tilde(1e9, 0.0, c, AngularMode::angular), 1.0, 1e-9));
    const double magic = std::acos(1.0 / std::sqrt(3.0));
    for (double r : {0.5, 1.0, 3.0, 100.0}) {
      CHECK(rel_close(u_tilde(r, magic, c, AngularMode::angular), 1.0, 1e-13));
      CHECK(u_tilde(r, units::pi / 2, c, AngularMode::angular) == u_tilde(r, units::pi / 2, c, AngularMode::isotropic));
    }
    CHECK_THROWS_AS(u_tilde(0.0, 0.0, c, AngularMode::isotropic), DomainError);
    CHECK_THROWS_AS(u_tilde(-1.0, 0.0, c, AngularMode::isotropic), DomainError);
  }

  TEST_CASE("cavity form agrees with the coefficient form") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
      const auto c = coefficients(random_params(rng, false));
      for (double x : {0.3, 1.0, 4.0}) {
        const double r = x * c.R;
        CHECK(rel_close(u_tilde_cavity_form(r, c), u_tilde(r, 0.0, c, AngularMode::isotropic), 1e-10));
      }
    }
  }

  TEST_CASE("small-r limit is free-space van der Waals") {
    const auto c = coefficients(row12d());
    const double r = c.r1 / 100.0;
    const double ratio = (u_tilde(r, 0.0, c, AngularMode::isotropic) - c.C0) / (c.C6 / std::pow(r, 6));
    CHECK(std::abs(ratio - 1.0) <= 1e-6 * (1 + 1e-9));
  }

  TEST_CASE("angular minimum at theta = pi/2") {
    // C3 < 0 < C6 and r^3 > 2 C6/|C3|: the C3 channel dominates the curvature.
    const auto c = PotentialCoefficients::direct(1.0, -8.0, 16.0);
    const double r = 2.0, h = 1e-4, th = units::pi / 2;
    auto U = [&](double t) { return u_tilde(r, t, c, AngularMode::angular); };
    const double d1 = (U(th + h) - U(th - h)) / (2 * h);
    const double d2 = (U(th + h) - 2 * U(th) + U(th - h)) / (h * h);
    CHECK(std::abs(d1) < 1e-8);
    CHECK(d2 > 0.0);
  }

  TEST_CASE("crossover radii") {
    SUBCASE("Delta = 0 gives r1 = R") {
      PotentialCoefficients c;
      c.R = 2.5;
      c.delta = 1.0;
      c.Delta = 0.0;
      c.sign_delta = 1;
      c.cavity_form = true;
      CHECK(crossover_radii(c).r1 == 2.5);
    }
    SUBCASE("1 + Delta/(2 delta) = 0 gives r1 = inf") {
      PotentialCoefficients c;
      c.R = 2.5;
      c.delta = -1.0;
      c.Delta = 2.0;
      c.sign_delta = -1;
      c.cavity_form = true;
      CHECK(std::isinf(crossover_radii(c).r1));
    }
    SUBCASE("unequal dipoles fall back to the coefficient ratio") {
      const auto p = PhysicalParams::from_detunings(units::angular_from_hz(0.5e12), units::angular_from_hz(-0.8e9),
                                                    units::angular_from_hz(3.5e9), 220.0, 140.0, 2.5e9);
      const auto c = coefficients(p);
      CHECK_FALSE(c.cavity_form);
      // mpmath, tests/oracles/potential_oracle.py
      CHECK(rel_close(c.r1, 41.639832285012040721, 1e-11));
      CHECK(std::isnan(crossover_radii(c).r2_closed));
      CHECK_THROWS_AS(u_tilde_cavity_form(c.R, c), ContractError);
      CHECK_THROWS_AS(special_case_potential(c, SpecialDetuning::half_delta, c.R), ContractError);
    }
    SUBCASE("numeric r2 solves its defining equation") {
      std::mt19937_64 rng(41);
      for (int i = 0; i < 50; ++i) {
        const auto c = coefficients(random_params(rng, false));
        const double r = c.r2_numeric;
        REQUIRE(std::isfinite(r));
        CHECK(rel_close(std::abs(c.C3 / std::pow(r, 3) + c.C6 / std::pow(r, 6)), std::abs(c.C0), 1e-10));
      }
    }
    SUBCASE("closed-form r2 equals the numeric root on the positive branch") {
      std::mt19937_64 rng(43);
      for (int i = 0; i < 50; ++i) {
        const auto c = coefficients(random_params(rng, true));
        const auto radii = crossover_radii(c);
        CHECK(rel_close(radii.r2_closed, radii.r2_numeric, 1e-6));
        CHECK(rel_close(radii.r2_printed * std::cbrt(2.0), radii.r2_closed, 1e-12));
      }
    }
    SUBCASE("degenerate inputs of the root finder") {
      CHECK(std::isinf(solve_r2(0.0, 1.0, 1.0)));
      CHECK(solve_r2(1.0, 0.0, 0.0) == 0.0);
    }
  }

  TEST_CASE("special detunings") {
    const double wd = units::angular_from_hz(1.1e12);
    const double Delta = units::angular_from_hz(4e9);
    for (double sgn : {1.0, -1.0}) {
      SUBCASE("delta = -Delta/2") {
        const auto p = with_half_wavelength_volume(PhysicalParams::from_detunings(wd, -0.5 * sgn * Delta, sgn * Delta, 300, 300, 1));
        const auto c = coefficients(p);
        for (double x : {0.2, 0.7, 1.0, 1.9, 6.0}) {
          const double r = x * c.R;
          CHECK(rel_close(special_case_potential(c, SpecialDetuning::half_delta, r), u_tilde(r, 0.0, c, AngularMode::isotropic), 1e-10));
        }
        CHECK(rel_close(special_case_potential(c, SpecialDetuning::half_delta, 1e6 * c.R),
                        -c.C6 / (4 * std::pow(c.R, 6)), 1e-10));
        CHECK_THROWS_AS(special_case_potential(c, SpecialDetuning::full_delta, c.R), ContractError);
      }
      SUBCASE("delta = -Delta") {
        const auto p = with_half_wavelength_volume(PhysicalParams::from_detunings(wd, -sgn * Delta, sgn * Delta, 300, 300, 1));
        const auto c = coefficients(p);
        for (double x : {0.2, 0.7, 1.0, 1.9, 6.0}) {
          const double r = x * c.R;
          const double U = u_tilde(r, 0.0, c, AngularMode::isotropic);
          const double S = special_case_potential(c, SpecialDetuning::full_delta, r);
          CHECK(std::abs(S - U) <= 1e-10 * (std::abs(U) + std::abs(c.C6) / std::pow(r, 6)));
        }
        if (c.sign_delta < 0)
          CHECK(std::abs(special_case_potential(c, SpecialDetuning::full_delta, std::cbrt(2.0) * c.R)) <=
                1e-12 * std::abs(c.C6) / std::pow(c.R, 6));
        CHECK_THROWS_AS(special_case_potential(c, SpecialDetuning::half_delta, c.R), ContractError);
      }
    }
  }

  TEST_CASE("regime classification") {
    const auto c = coefficients(row12d());
    REQUIRE(c.r0 < c.r1);
    REQUIRE(c.r1 < c.r2_numeric);
    CHECK(classify_regime(c, c.r0 / 2) == Regime::below_validity);
    CHECK(classify_regime(c, 0.5 * (c.r0 + c.r1)) == Regime::free_vdw);
    CHECK(classify_regime(c, 0.5 * (c.r1 + c.r2_numeric)) == Regime::dipole_dipole);
    CHECK(classify_regime(c, 2 * c.r2_numeric) == Regime::all_to_all);
    CHECK(std::string(to_string(Regime::free_vdw)) == "free_vdW");

    // Dominant summand at geometric regime midpoints matches the label.
    std::mt19937_64 rng(47);
    int checked = 0;
    for (int i = 0; i < 200 && checked < 30; ++i) {
      const auto d = coefficients(random_params(rng, false));
      if (!(d.r0 < d.r1 && d.r1 < d.r2_numeric)) continue;
      ++checked;
      auto dominant = [&](double r) {
        const double t0 = std::abs(d.C0), t3 = std::abs(d.C3 / std::pow(r, 3)), t6 = std::abs(d.C6 / std::pow(r, 6));
        return t6 >= t3 && t6 >= t0 ? Regime::free_vdw : (t3 >= t0 ? Regime::dipole_dipole : Regime::all_to_all);
      };
      for (double r : {std::sqrt(d.r0 * d.r1), std::sqrt(d.r1 * d.r2_numeric), 10 * d.r2_numeric})
        CHECK(dominant(r) == classify_regime(d, r));
      for (double x : {0.2, 0.5, 0.9})
        CHECK(std::abs(d.C6 / std::pow(d.r0 + x * (d.r1 - d.r0), 6)) > std::abs(d.C3 / std::pow(d.r0 + x * (d.r1 - d.r0), 3)));
    }
    CHECK(checked >= 10);
  }
}
