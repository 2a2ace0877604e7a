#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rydcav/params.hpp"
#include "rydcav/potential.hpp"

namespace rydcav::ramsey {

using complex = std::complex<double>;

// Which terms of U-tilde(r) act between atoms.
enum class InteractionMode {
  full,                  // C0 + C3/r^3 + C6/r^6
  dipole_plus_constant,  // C0 + C3/r^3
  all_to_all,            // C0
  free_space,            // C6/r^6
};

const char* to_string(InteractionMode m);
InteractionMode interaction_mode_from_string(const std::string& s);

// Pair energy at separation r (um) for the selected mode.
double pair_energy(double r, const PotentialCoefficients& c, InteractionMode mode);

// Where the atoms of one Monte-Carlo realization sit.
enum class Geometry {
  // N atoms uniform in a sphere, G averaged over every atom's partner product.
  ensemble,
  // One probe atom at the sphere centre, N-1 partners uniform in the sphere.
  central_probe,
};

const char* to_string(Geometry g);
Geometry geometry_from_string(const std::string& s);

struct RamseyConfig {
  double p_g = 0.95;
  double p_d = 0.05;
  int N = 1000;
  double density = 0.35;          // um^-3
  double blockade_radius = 0.0;   // um
  std::vector<double> tau_grid;   // us
  int realizations = 20;
  std::uint64_t seed = 1;
  InteractionMode mode = InteractionMode::full;
  Geometry geometry = Geometry::ensemble;
  int threads = 0;  // 0: hardware concurrency

  // Radius of the sphere holding N atoms at the configured density.
  double sphere_radius() const;

  // Throws ConfigError on p_g + p_d != 1, p_d outside [0,1], N < 2, density <= 0,
  // realizations < 1 or negative blockade radius.
  void validate() const;
};

// kappa = 4 pi n C3 / 3.
double kappa(double density, double C3);

struct ContrastPhase {
  double contrast = 1.0;
  double phase = 0.0;
};

// (p_g + p_d e^{i C0 tau})^(N-1) in modulus/argument form; the phase is (N-1) zeta with
// zeta in (-pi, pi].
ContrastPhase contrast_all_to_all(int N, double p_g, double p_d, double C0, double tau);

// Large-N contrast at revival times: product of the three exponentials built from
// F(tau) and the Fresnel integrals at sqrt(tau / (4 eta)).
double contrast_asymptotic(double tau, double kappa, double eta, double p_d);

// Free-space van der Waals only: exp(-2 p_d sqrt(pi/8) kappa sqrt(eta tau)).
double free_space_contrast(double tau, double kappa, double eta, double p_d);

struct LargeNGamma {
  complex value{1.0, 0.0};
  // False when kappa tau / N < 1e-12: the Ci terms of the imaginary part are then
  // dominated by their logarithmic divergence.
  bool phase_converged = true;
};

// Continuum gamma(tau) for N -> inf, omega_B -> inf with omega_0 = kappa / N.
LargeNGamma gamma_large_n(double tau, double kappa, double eta, double N, double C0);

enum class SignalDomain { time, frequency };

// P(tau) = 2 p_g p_d Re{1 + e^{i(omega tau + xi)} G}. `omega` is the Stark-shifted
// d-g frequency (time domain) or the laser detuning from it (frequency domain).
double ramsey_signal(double tau, complex G, double omega, double xi, double p_g, double p_d,
                     SignalDomain domain = SignalDomain::time);

// omega_d + g^2/delta - g^4/delta^3 - omega_g.
double fringe_frequency(const PhysicalParams& p);

// omega_laser - (Stark-shifted omega_d - omega_g).
double laser_detuning(const PhysicalParams& p, double omega_laser);

// True if tau lies within `rel_tol` of 2 pi k / C0 for some integer k >= 0.
bool is_revival_time(double tau, double C0, double rel_tol = 1e-9);

}  // namespace rydcav::ramsey
