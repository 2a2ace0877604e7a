#include "rydcav/params.hpp"

#include <algorithm>
#include <cmath>

#include "rydcav/errors.hpp"
#include "rydcav/units.hpp"

namespace rydcav {

PhysicalParams PhysicalParams::equal_dipoles(double omega_d, double omega_p, double omega_cav,
                                             double mu, double mode_volume) {
  PhysicalParams p;
  p.omega_d = omega_d;
  p.omega_p = omega_p;
  p.omega_cav = omega_cav;
  p.mu_a = mu;
  p.mu_b = mu;
  p.mode_volume = mode_volume;
  return p;
}

PhysicalParams PhysicalParams::from_detunings(double omega_d, double cavity_detuning,
                                              double forster_detuning, double mu_a, double mu_b,
                                              double mode_volume) {
  PhysicalParams p;
  p.omega_d = omega_d;
  p.omega_cav = omega_d - cavity_detuning;
  p.omega_p = 2.0 * omega_d - forster_detuning;
  p.mu_a = mu_a;
  p.mu_b = mu_b;
  p.mode_volume = mode_volume;
  return p;
}

void PhysicalParams::validate() const {
  if (!(mode_volume > 0.0)) throw DomainError("mode volume must be positive");
  if (!(omega_cav > 0.0)) throw DomainError("cavity frequency must be positive");
  if (mu_a < 0.0 || mu_b < 0.0) throw DomainError("dipole moments must be non-negative");
}

double cavity_coupling(const PhysicalParams& p, Transition which) {
  return cavity_coupling(p, which, p.mode_amplitude);
}

double cavity_coupling(const PhysicalParams& p, Transition which, double mode_amplitude) {
  if (!(p.mode_volume > 0.0)) throw DomainError("cavity_coupling: mode volume must be positive");
  if (!(p.omega_cav > 0.0)) throw DomainError("cavity_coupling: cavity frequency must be positive");
  using namespace units;
  const double mu = which == Transition::a ? p.mu_a : p.mu_b;
  // Evaluate in SI then convert: g [rad/s] = mu [C m] sqrt(omega [rad/s] / (2 eps0 V [m^3] hbar)).
  const double omega_si = rad_per_s_from_rad_per_us(p.omega_cav);
  const double volume_si = m3_from_um3(p.mode_volume);
  const double g_si = C_m_from_a0e(mu) *
                      std::sqrt(omega_si / (2.0 * vacuum_permittivity_F_per_m * volume_si * hbar_J_s));
  return rad_per_us_from_rad_per_s(g_si) * mode_amplitude;
}

VdwRadius cavity_vdw_radius(const PhysicalParams& p) {
  if (p.omega_cav == 0.0) throw DomainError("cavity_vdw_radius: cavity frequency is zero");
  const double delta = p.cavity_detuning();
  if (delta == 0.0) return {0.0, true};
  return {std::cbrt(std::abs(delta) * p.mode_volume / (4.0 * units::pi * p.omega_cav)), false};
}

double exchange_u_prefactor(const PhysicalParams& p) {
  return p.mu_a * p.mu_b * units::dipole_dipole_scale;
}

double exchange_j_prefactor(const PhysicalParams& p) {
  return p.mu_a * p.mu_a * units::dipole_dipole_scale;
}

double angular_factor(double theta) {
  const double c = std::cos(theta);
  return 1.0 - 3.0 * c * c;
}

double PerturbativeReport::min_ratio() const {
  return *std::min_element(ratios.begin(), ratios.end());
}

PerturbativeReport validate_perturbative(const PhysicalParams& p, double U, double J,
                                         double threshold) {
  const auto ratio = [](double num, double den) {
    den = std::abs(den);
    return den == 0.0 ? PerturbativeReport::unbounded : std::abs(num) / den;
  };
  const double g = std::max(cavity_coupling(p, Transition::a), cavity_coupling(p, Transition::b));
  const double delta = p.cavity_detuning();
  const double forster = p.forster_detuning();

  PerturbativeReport r;
  r.threshold = threshold;
  r.ratios = {ratio(delta, g), ratio(forster, g), ratio(delta, U), ratio(forster, U),
              ratio(delta, J)};
  r.pass = std::all_of(r.ratios.begin(), r.ratios.end(),
                       [threshold](double x) { return x >= threshold; });
  return r;
}

}  // namespace rydcav
