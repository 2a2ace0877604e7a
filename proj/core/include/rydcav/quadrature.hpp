#pragma once

#include <functional>

namespace rydcav::quad {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 400;
  int max_lobes = 2000;  // cap on accelerated oscillatory sums
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  bool converged = true;
};

using Integrand = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod (10/21 point) on a finite interval.
QuadResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg = {});

// Sum of term(0) + term(1) + ... for alternating terms of decreasing magnitude.
// The first `lead` terms are added directly; the rest are accelerated by repeated
// averaging of partial sums (Euler transform). Stops early once a term drops
// below abs_tol.
QuadResult sum_alternating(const std::function<double(int)>& term, const QuadratureConfig& cfg = {},
                           int lead = 4);

// Integral of f over [a, inf) where f oscillates with zeros at offset + k*period
// and decays monotonically in envelope. Integrates up to the first zero at or
// after a, then sums the accelerated lobe series.
QuadResult integrate_oscillatory_tail(const Integrand& f, double a, double offset, double period,
                                      const QuadratureConfig& cfg = {});

}  // namespace rydcav::quad
