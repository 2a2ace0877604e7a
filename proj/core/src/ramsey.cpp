#include "rydcav/ramsey.hpp"

#include <cmath>
#include <string>

#include "rydcav/errors.hpp"
#include "rydcav/specfun.hpp"
#include "rydcav/units.hpp"

namespace rydcav::ramsey {

const char* to_string(InteractionMode m) {
  switch (m) {
    case InteractionMode::full: return "full";
    case InteractionMode::dipole_plus_constant: return "dipole_plus_constant";
    case InteractionMode::all_to_all: return "all_to_all";
    case InteractionMode::free_space: return "free_space";
  }
  return "?";
}

InteractionMode interaction_mode_from_string(const std::string& s) {
  if (s == "full") return InteractionMode::full;
  if (s == "dipole_plus_constant") return InteractionMode::dipole_plus_constant;
  if (s == "all_to_all") return InteractionMode::all_to_all;
  if (s == "free_space") return InteractionMode::free_space;
  throw ConfigError("mode", "unknown interaction mode '" + s + "'");
}

const char* to_string(Geometry g) {
  return g == Geometry::ensemble ? "ensemble" : "central_probe";
}

Geometry geometry_from_string(const std::string& s) {
  if (s == "ensemble") return Geometry::ensemble;
  if (s == "central_probe" || s == "probe") return Geometry::central_probe;
  throw ConfigError("geometry", "unknown geometry '" + s + "'");
}

double pair_energy(double r, const PotentialCoefficients& c, InteractionMode mode) {
  const double s = 1.0 / (r * r * r);
  switch (mode) {
    case InteractionMode::full: return c.C0 + c.C3 * s + c.C6 * s * s;
    case InteractionMode::dipole_plus_constant: return c.C0 + c.C3 * s;
    case InteractionMode::all_to_all: return c.C0;
    case InteractionMode::free_space: return c.C6 * s * s;
  }
  return 0.0;
}

double RamseyConfig::sphere_radius() const {
  return std::cbrt(3.0 * N / (4.0 * units::pi * density));
}

void RamseyConfig::validate() const {
  if (!(p_d >= 0.0 && p_d <= 1.0)) throw ConfigError("p_d", "must lie in [0, 1]");
  if (!(p_g >= 0.0 && p_g <= 1.0)) throw ConfigError("p_g", "must lie in [0, 1]");
  if (std::abs(p_g + p_d - 1.0) > 1e-12) throw ConfigError("p_g", "p_g + p_d must equal 1");
  if (N < 2) throw ConfigError("N", "need at least two atoms");
  if (!(density > 0.0)) throw ConfigError("density", "must be positive");
  if (realizations < 1) throw ConfigError("realizations", "must be at least 1");
  if (!(blockade_radius >= 0.0)) throw ConfigError("blockade_radius", "must be non-negative");
  for (double t : tau_grid)
    if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("tau_grid", "entries must be finite and >= 0");
}

double kappa(double density, double C3) { return 4.0 * units::pi * density * C3 / 3.0; }

ContrastPhase contrast_all_to_all(int N, double p_g, double p_d, double C0, double tau) {
  const double x = C0 * tau;
  const double base2 = p_g * p_g + p_d * p_d + 2.0 * p_g * p_d * std::cos(x);
  const double zeta = std::atan2(p_d * std::sin(x), p_g + p_d * std::cos(x));
  ContrastPhase out;
  out.contrast = std::pow(std::max(base2, 0.0), 0.5 * (N - 1));
  out.phase = (N - 1) * zeta;
  return out;
}

namespace {

struct FresnelBrackets {
  double sin_part;  // (q - S) cos(theta) - (q - C) sin(theta)
  double cos_part;  // (q - C) cos(theta) + (q - S) sin(theta)
};

FresnelBrackets fresnel_brackets(double tau, double eta) {
  const double x = std::sqrt(tau / (4.0 * eta));
  const double theta = tau / (4.0 * eta);
  const double q = specfun::fresnel_limit;
  const double qs = q - specfun::fresnel_s(x);
  const double qc = q - specfun::fresnel_c(x);
  const double c = std::cos(theta), s = std::sin(theta);
  return {qs * c - qc * s, qc * c + qs * s};
}

}  // namespace

double contrast_asymptotic(double tau, double kappa, double eta, double p_d) {
  if (tau < 0.0) throw DomainError("contrast_asymptotic: tau must be >= 0");
  if (tau == 0.0) return 1.0;
  const double F = specfun::f_tau(eta, tau);
  const auto b = fresnel_brackets(tau, eta);
  const double e1 = -0.5 * p_d * kappa * tau * (0.5 * units::pi + F);
  const double e2 = -2.0 * p_d * std::sqrt(eta * tau) * kappa * b.sin_part;
  return std::exp(e1 + e2);
}

double free_space_contrast(double tau, double kappa, double eta, double p_d) {
  if (tau < 0.0) throw DomainError("free_space_contrast: tau must be >= 0");
  return std::exp(-2.0 * p_d * specfun::fresnel_limit * kappa * std::sqrt(eta * tau));
}

LargeNGamma gamma_large_n(double tau, double kappa, double eta, double N, double C0) {
  if (tau < 0.0) throw DomainError("gamma_large_n: tau must be >= 0");
  if (!(eta > 0.0)) throw DomainError("gamma_large_n: eta must be positive");
  if (!(N > 0.0)) throw DomainError("gamma_large_n: N must be positive");
  LargeNGamma out;
  if (tau == 0.0) return out;
  const double x = kappa * tau / N;
  const double F = specfun::f_tau(eta, tau);
  const auto b = fresnel_brackets(tau, eta);
  const double amp = 2.0 * std::sqrt(eta * tau) * kappa / N;
  const double re = 1.0 - 0.5 * x * (0.5 * units::pi + F) - amp * b.sin_part;
  double im = amp * b.cos_part;
  if (x < 1e-12) {
    out.phase_converged = false;
  }
  if (x > 0.0) {
    const double ci = specfun::cos_integral(x);
    const double cim = specfun::cos_integral_mod(4.0 * eta / tau, x);
    im += x * (1.0 - 0.5 * ci - 0.5 * cim);
  }
  out.value = std::polar(1.0, C0 * tau) * complex(re, im);
  return out;
}

double ramsey_signal(double tau, complex G, double omega, double xi, double p_g, double p_d,
                     SignalDomain domain) {
  (void)domain;  // both domains share the form, only the meaning of omega differs
  const complex fringe = std::polar(1.0, omega * tau + xi);
  return 2.0 * p_g * p_d * (1.0 + (fringe * G).real());
}

double fringe_frequency(const PhysicalParams& p) {
  const double delta = p.cavity_detuning();
  if (delta == 0.0) throw DomainError("fringe_frequency: cavity detuning is zero");
  const double g = cavity_coupling(p, Transition::a);
  const double g2 = g * g;
  return p.omega_d + g2 / delta - g2 * g2 / (delta * delta * delta) - p.omega_g;
}

double laser_detuning(const PhysicalParams& p, double omega_laser) {
  return omega_laser - fringe_frequency(p);
}

bool is_revival_time(double tau, double C0, double rel_tol) {
  if (C0 == 0.0) return true;
  const double period = 2.0 * units::pi / std::abs(C0);
  const double k = std::round(tau / period);
  return std::abs(tau - k * period) <= rel_tol * std::max(tau, period);
}

}  // namespace rydcav::ramsey
