#pragma once

#include <array>
#include <limits>

namespace rydcav {

// Atomic and cavity constants for one species/cavity pair. Frequencies in rad/us,
// dipoles in a0*e, mode volume in um^3. Level f is the energy zero.
struct PhysicalParams {
  double omega_d = 0.0;    // level d above f
  double omega_p = 0.0;    // level p above f
  double omega_cav = 0.0;  // cavity mode
  double mu_a = 0.0;       // f <-> d transition dipole
  double mu_b = 0.0;       // d <-> p transition dipole
  double mode_volume = 0.0;
  double mode_amplitude = 1.0;  // mode function at the atom
  double omega_g = 0.0;         // ground level, only enters the Ramsey fringe frequency

  // Equal dipoles on both transitions, mode amplitude 1.
  static PhysicalParams equal_dipoles(double omega_d, double omega_p, double omega_cav, double mu,
                                      double mode_volume);

  // Builds the parameter set from detunings instead of absolute level positions.
  static PhysicalParams from_detunings(double omega_d, double cavity_detuning,
                                       double forster_detuning, double mu_a, double mu_b,
                                       double mode_volume);

  // delta = omega_d - omega_cav
  double cavity_detuning() const { return omega_d - omega_cav; }
  // Delta = 2 omega_d - omega_p
  double forster_detuning() const { return 2.0 * omega_d - omega_p; }

  // Throws DomainError if mode_volume <= 0, omega_cav <= 0 or a dipole is negative.
  void validate() const;
};

enum class Transition { a, b };

// Jaynes-Cummings coupling g = mu sqrt(omega / (2 eps0 V hbar)) Phi, in rad/us.
double cavity_coupling(const PhysicalParams& p, Transition which);

// Same, with the mode-function value at one particular atom.
double cavity_coupling(const PhysicalParams& p, Transition which, double mode_amplitude);

struct VdwRadius {
  double radius = 0.0;  // um
  bool degenerate_detuning = false;
};

// R = (|delta| V / (4 pi omega))^(1/3).
VdwRadius cavity_vdw_radius(const PhysicalParams& p);

// Dipole-dipole prefactors at unit distance (rad/us um^3):
//   U r^3 = mu_a mu_b / (4 pi eps0),  J r^3 = mu_a^2 / (4 pi eps0).
double exchange_u_prefactor(const PhysicalParams& p);
double exchange_j_prefactor(const PhysicalParams& p);

// Angular factor 1 - 3 cos^2(theta).
double angular_factor(double theta);

struct PerturbativeReport {
  static constexpr double unbounded = std::numeric_limits<double>::infinity();

  // |delta|/g, |Delta|/g, |delta|/|U|, |Delta|/|U|, |delta|/|J|; infinity if the
  // denominator vanishes.
  std::array<double, 5> ratios{};
  double threshold = 10.0;
  bool pass = true;

  double min_ratio() const;
};

// g is the larger of g_a and g_b.
PerturbativeReport validate_perturbative(const PhysicalParams& p, double U, double J,
                                         double threshold = 10.0);

}  // namespace rydcav
