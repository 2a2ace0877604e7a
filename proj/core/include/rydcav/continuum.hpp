#pragma once

#include <complex>

#include "rydcav/potential.hpp"
#include "rydcav/quadrature.hpp"

namespace rydcav::ramsey {

enum class ContinuumMethod { closed_form, quadrature };

// Spectral parameters of the continuum average. omega = C3 / r^3 runs from
// omega0 (outer radius) to omegaB (blockade radius, may be +inf).
struct ContinuumParams {
  double omega0 = 0.0;
  double omegaB = 0.0;
  double eta = 0.0;  // C6 / C3^2
  double C0 = 0.0;

  // From potential coefficients and radii; r_blockade = 0 maps to omegaB = inf.
  // Requires C3 > 0, C6 >= 0, 0 <= r_blockade < r_outer.
  static ContinuumParams from_coefficients(const PotentialCoefficients& c, double r_outer,
                                           double r_blockade = 0.0);
};

// gamma(tau): average of e^{i U(r) tau} over a uniform ball shell. Closed form uses
// Fresnel and (modified) trigonometric integrals; quadrature integrates the
// omega-space form lobe by lobe.
std::complex<double> gamma_continuum(double tau, const ContinuumParams& cp,
                                     ContinuumMethod method = ContinuumMethod::closed_form,
                                     const quad::QuadratureConfig& cfg = {});

// Same average over r in [r_blockade, r_outer]; handles C3 = C6 = 0 (pure e^{i C0 tau}).
std::complex<double> gamma_continuum(double tau, const PotentialCoefficients& c, double r_outer,
                                     double r_blockade = 0.0,
                                     ContinuumMethod method = ContinuumMethod::closed_form,
                                     const quad::QuadratureConfig& cfg = {});

}  // namespace rydcav::ramsey
