#pragma once

#include <limits>

#include "rydcav/params.hpp"

namespace rydcav {

// Reduced description of the pair potential U(r) = C0 + C3/r^3 + C6/r^6.
// Energies in rad/us, lengths in um. Radii that cannot be defined for the
// supplied data are NaN (direct coefficients) or +inf (vanishing denominators).
struct PotentialCoefficients {
  static constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  static constexpr double inf = std::numeric_limits<double>::infinity();

  double C0 = 0.0;
  double C3 = 0.0;
  double C6 = 0.0;
  double R = nan;    // cavity van der Waals radius
  double eta = nan;  // C6 / C3^2
  double r0 = nan;   // lower validity radius
  double r1 = nan;   // |C3/r^3| = |C6/r^6|
  double r2 = nan;   // closed form of |C3/r^3 + C6/r^6| = |C0|, outer branch
  double r2_numeric = nan;
  double delta = nan;
  double Delta = nan;
  int sign_delta = 0;
  // R-based closed forms hold: equal dipoles and unit mode amplitude.
  bool cavity_form = false;

  // Coefficients given directly (no underlying physical parameters).
  // r1 and r2_numeric are filled from C0, C3, C6 alone.
  static PotentialCoefficients direct(double C0, double C3, double C6);
};

// Throws DomainError if delta or Delta vanishes.
PotentialCoefficients coefficients(const PhysicalParams& p);

enum class AngularMode { isotropic, angular };

// U-tilde(r, theta). In angular mode the C3 term carries one factor of
// 1 - 3cos^2(theta) and the C6 term two. Throws DomainError for r <= 0.
double u_tilde(double r, double theta, const PotentialCoefficients& c,
               AngularMode mode = AngularMode::isotropic);

// U-tilde written in terms of R, C6 and the detunings. ContractError unless c.cavity_form.
double u_tilde_cavity_form(double r, const PotentialCoefficients& c);

struct CrossoverRadii {
  double r0 = 0.0;
  double r1 = 0.0;
  double r2_closed = 0.0;
  double r2_printed = 0.0;  // closed form without the 1/2 inside the cube root
  // r2_closed and r2_printed are NaN unless c.cavity_form; r1 then comes from C3, C6.
  double r2_numeric = 0.0;
};

CrossoverRadii crossover_radii(const PotentialCoefficients& c);

// Largest r with |C3/r^3 + C6/r^6| = |C0|, by bracketing and bisection.
// +inf when C0 = 0, 0 when C3 = C6 = 0.
double solve_r2(double C0, double C3, double C6);

enum class SpecialDetuning { half_delta, full_delta };

// delta = -Delta/2: C6 (1/r^6 - 1/(4R^6)).
// delta = -Delta:   C6 (1/r^6 + sgn(delta)/(2 R^3 r^3)), i.e. the minus sign for delta < 0.
// Throws ContractError if the detunings do not match the case within 1e-9 relative
// or the coefficients lack the cavity form.
double special_case_potential(const PotentialCoefficients& c, SpecialDetuning which, double r);

enum class Regime { below_validity, free_vdw, dipole_dipole, all_to_all };

const char* to_string(Regime r);

// Uses r0, r1 and the numerically solved r2.
Regime classify_regime(const PotentialCoefficients& c, double r);

}  // namespace rydcav
