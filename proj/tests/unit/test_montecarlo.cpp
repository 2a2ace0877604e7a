#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>

#include "doctest.h"
#include "rydcav/errors.hpp"
#include "rydcav/montecarlo.hpp"
#include "rydcav/ramsey.hpp"
#include "rydcav/rng.hpp"

using namespace rydcav;
using namespace rydcav::ramsey;

namespace {

constexpr double pi = std::numbers::pi;

double distance(const Position& a, const Position& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

RamseyConfig small_config() {
  RamseyConfig cfg;
  cfg.N = 60;
  cfg.density = 0.35;
  cfg.p_d = 0.05;
  cfg.p_g = 0.95;
  cfg.realizations = 5;
  cfg.seed = 99;
  cfg.threads = 1;
  for (int i = 0; i <= 40; ++i) cfg.tau_grid.push_back(0.15 * i);
  return cfg;
}

}  // namespace

TEST_SUITE("montecarlo") {
  TEST_CASE("counter-based generator") {
    // SplitMix64 reference: first output for state 0.
    CHECK(CounterRng::mix(0x9E3779B97F4A7C15ULL) == 0xE220A8397B1DCDAFULL);
    CounterRng a(7, 3), b(7, 3), c(7, 4), d(8, 3);
    bool differs_c = false, differs_d = false;
    for (int i = 0; i < 100; ++i) {
      const auto x = a.next_u64();
      CHECK(x == b.next_u64());
      differs_c |= x != c.next_u64();
      differs_d |= x != d.next_u64();
    }
    CHECK(differs_c);
    CHECK(differs_d);
    CHECK(a.counter() == 100);

    CounterRng u(1, 0);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      const double v = u.next_unit();
      REQUIRE(v >= 0.0);
      REQUIRE(v < 1.0);
      sum += v;
    }
    CHECK(std::abs(sum / n - 0.5) < 5 * std::sqrt(1.0 / 12 / n));
  }

  TEST_CASE("ensemble sampling") {
    auto cfg = small_config();
    const auto e = sample_ensemble(cfg, 0);
    CHECK(e.positions.size() == 60);
    CHECK(e.sphere_radius == doctest::Approx(cfg.sphere_radius()));
    for (const auto& p : e.positions) CHECK(distance(p, {0, 0, 0}) <= e.sphere_radius);
    CHECK(sample_ensemble(cfg, 0).positions == e.positions);
    CHECK(sample_ensemble(cfg, 1).positions != e.positions);

    cfg.geometry = Geometry::central_probe;
    const auto probe = sample_ensemble(cfg, 0);
    CHECK(probe.positions[0] == Position{0, 0, 0});

    cfg.blockade_radius = 1.0;
    const auto blocked = sample_ensemble(cfg, 2);
    double dmin = 1e300;
    for (std::size_t i = 0; i < blocked.positions.size(); ++i)
      for (std::size_t j = i + 1; j < blocked.positions.size(); ++j)
        dmin = std::min(dmin, distance(blocked.positions[i], blocked.positions[j]));
    CHECK(dmin >= 1.0);

    cfg.blockade_radius = 2.0 * cfg.sphere_radius() / std::cbrt(60.0);
    CHECK(packing_fraction(cfg) > 0.3);
    CHECK_THROWS_AS(sample_ensemble(cfg, 0), DomainError);
  }

  TEST_CASE("three-atom product against the symbolic oracle") {
    // sympy, tests/oracles/ramsey_oracle.py
    const std::vector<std::vector<double>> U = {{0.0, 0.3, -1.1}, {0.3, 0.0, 2.4}, {-1.1, 2.4, 0.0}};
    const auto G = g_from_pair_energies(U, 0.7, 0.3, 0.7);
    CHECK(std::abs(G - std::complex<double>(0.7465893855276312, 0.10712559557736555)) <= 1e-14);
    CHECK(g_from_pair_energies(U, 0.7, 0.3, 0.0) == std::complex<double>(1.0, 0.0));
  }

  TEST_CASE("exact G from positions") {
    const auto c = PotentialCoefficients::direct(0.4, 2.5, 10.0);
    auto cfg = small_config();
    const auto pos = sample_ensemble(cfg, 5).positions;
    const std::size_t n = pos.size();
    std::vector<std::vector<double>> U(n, std::vector<double>(n, 0.0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (j != k) U[j][k] = pair_energy(distance(pos[j], pos[k]), c, InteractionMode::full);

    for (double tau : {0.3, 1.7, 6.0}) {
      CHECK(std::abs(g_exact(pos, c, 0.95, 0.05, tau, InteractionMode::full) -
                     g_from_pair_energies(U, 0.95, 0.05, tau)) <= 1e-13);
      std::complex<double> probe(1.0, 0.0);
      for (std::size_t k = 1; k < n; ++k) probe *= 0.95 + 0.05 * std::polar(1.0, U[0][k] * tau);
      CHECK(std::abs(g_exact(pos, c, 0.95, 0.05, tau, InteractionMode::full, Geometry::central_probe) - probe) <= 1e-13);
    }
    CHECK(g_exact(pos, c, 0.95, 0.05, 0.0, InteractionMode::full) == std::complex<double>(1.0, 0.0));

    auto dup = pos;
    dup[1] = dup[0];
    CHECK_THROWS_AS(g_exact(dup, c, 0.95, 0.05, 1.0, InteractionMode::full), DomainError);
  }

  TEST_CASE("all-to-all mode reproduces the analytic contrast") {
    auto cfg = small_config();
    cfg.mode = InteractionMode::all_to_all;
    const auto c = PotentialCoefficients::direct(1.3, 2.5, 10.0);
    const auto s = monte_carlo_contrast(cfg, c);
    for (std::size_t t = 0; t < s.tau.size(); ++t) {
      const auto want = contrast_all_to_all(cfg.N, cfg.p_g, cfg.p_d, 1.3, s.tau[t]);
      CHECK(std::abs(s.contrast[t] - want.contrast) <= 1e-12);
      CHECK(s.contrast_stderr[t] <= 1e-12);
    }
  }

  TEST_CASE("results do not depend on the thread count") {
    auto cfg = small_config();
    const auto c = PotentialCoefficients::direct(1.0, 2.5, 10.0);
    const auto one = monte_carlo_contrast(cfg, c);
    cfg.threads = 3;
    const auto three = monte_carlo_contrast(cfg, c);
    CHECK(one == three);
    CHECK(one.realizations == 5);
    CHECK(one.contrast.front() == 1.0);
    cfg.seed = 100;
    CHECK_FALSE(monte_carlo_contrast(cfg, c) == one);
  }

  TEST_CASE("aggregation statistics") {
    using C = std::complex<double>;
    const std::vector<double> taus = {0.0, 1.0};
    const auto s = aggregate(taus, {{C(1, 0), C(0.5, 0)}, {C(1, 0), C(0.3, 0)}, {C(1, 0), C(0, 0.4)}});
    CHECK(s.realizations == 3);
    CHECK(std::abs(s.G[1] - C(0.8 / 3, 0.4 / 3)) <= 1e-15);
    CHECK(s.contrast[1] == doctest::Approx(std::abs(C(0.8 / 3, 0.4 / 3))));
    CHECK(s.mean_contrast[1] == doctest::Approx(0.4));
    const double sd = std::sqrt(((0.1) * (0.1) + 0.1 * 0.1 + 0) / 2.0);
    CHECK(s.mean_contrast_stderr[1] == doctest::Approx(sd / std::sqrt(3.0)));
    CHECK(s.contrast_stderr[0] == 0.0);
    // Projection onto the mean direction.
    const C dir = s.G[1] / std::abs(s.G[1]);
    double m = 0, v = 0;
    for (C z : {C(0.5, 0), C(0.3, 0), C(0, 0.4)}) m += (z * std::conj(dir)).real() / 3;
    for (C z : {C(0.5, 0), C(0.3, 0), C(0, 0.4)}) v += std::pow((z * std::conj(dir)).real() - m, 2) / 2;
    CHECK(s.contrast_stderr[1] == doctest::Approx(std::sqrt(v / 3)));
  }

  TEST_CASE("phase unwrapping") {
    std::vector<double> truth, wrapped;
    for (int i = 0; i < 100; ++i) {
      truth.push_back(0.4 * i);
      wrapped.push_back(std::remainder(0.4 * i, 2 * pi));
    }
    const auto u = unwrap_phase(wrapped);
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(u[i] == doctest::Approx(truth[i]).epsilon(1e-12));
  }

  TEST_CASE("CSV layout") {
    auto cfg = small_config();
    cfg.tau_grid = {0.0, 0.5};
    const auto s = monte_carlo_contrast(cfg, PotentialCoefficients::direct(1.0, 2.5, 10.0));
    std::ostringstream out;
    write_series_csv(out, s);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "tau[us],contrast,contrast_stderr,phase[rad],re_G,im_G,mean_contrast,mean_contrast_stderr");
    std::getline(in, line);
    CHECK(line.rfind("0.0000000000000000e+00,1.0000000000000000e+00,", 0) == 0);
    CHECK(std::count(line.begin(), line.end(), ',') == 7);
    std::getline(in, line);
    CHECK(line.rfind("5.0000000000000000e-01,", 0) == 0);
    CHECK_FALSE(std::getline(in, line));
  }
}
