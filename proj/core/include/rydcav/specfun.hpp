#pragma once

#include "rydcav/quadrature.hpp"

namespace rydcav::specfun {

using quad::QuadratureConfig;

// Fresnel integrals S(x) = int_0^x sin(t^2) dt, C(x) = int_0^x cos(t^2) dt (odd in x).
double fresnel_s(double x, const QuadratureConfig& cfg = {});
double fresnel_c(double x, const QuadratureConfig& cfg = {});

// sqrt(pi/8), the common limit of S and C.
inline constexpr double fresnel_limit = 0.62665706865775012560;

// Si(x) = int_0^x sin t / t dt (odd); Ci(x) = -int_x^inf cos t / t dt, DomainError for x <= 0.
double sin_integral(double x);
double cos_integral(double x);

// Si_M(beta, x) = int_0^x sin t / (t sqrt(beta t + 1)) dt, beta >= 0, x >= 0.
// x = +inf is accepted.
double sin_integral_mod(double beta, double x, const QuadratureConfig& cfg = {});

// Ci_M(beta, x) = -int_x^inf cos t / (t sqrt(beta t + 1)) dt, beta >= 0, x > 0.
double cos_integral_mod(double beta, double x, const QuadratureConfig& cfg = {});

// F(tau) = Si_M(4 eta / tau, inf); F(0) = 0, increasing to pi/2.
double f_tau(double eta, double tau, const QuadratureConfig& cfg = {});

}  // namespace rydcav::specfun
