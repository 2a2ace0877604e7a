#include "rydcav/continuum.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rydcav/errors.hpp"
#include "rydcav/specfun.hpp"
#include "rydcav/units.hpp"

namespace rydcav::ramsey {

namespace {

using complex = std::complex<double>;
constexpr double inf = std::numeric_limits<double>::infinity();

double phase_of(double w, double eta) { return w + eta * w * w; }

// Inverse of phase_of on w >= 0, written to avoid cancellation at small p.
double omega_of_phase(double p, double eta) { return 2.0 * p / (1.0 + std::sqrt(1.0 + 4.0 * eta * p)); }

struct PartIntegrator {
  double tau;
  double eta;
  bool imag;  // sin part (zeros at k pi) or cos part (zeros at pi/2 + k pi)
  quad::QuadratureConfig cfg;

  double offset() const { return imag ? 0.0 : 0.5 * units::pi; }
  double f(double w) const {
    const double x = phase_of(w, eta) * tau;
    return (imag ? std::sin(x) : std::cos(x)) / (w * w);
  }
  double boundary(double k) const { return omega_of_phase((offset() + k * units::pi) / tau, eta); }

  // Integral over u in [lo, hi] split at geometric steps, so that features near lo
  // are not missed on a range spanning many decades.
  double integrate_u(const quad::Integrand& g, double lo, double hi) const {
    double sum = 0.0;
    for (double x = lo; x < hi; x *= 8.0) sum += quad::integrate(g, x, std::min(8.0 * x, hi), cfg).value;
    return sum;
  }

  // Segment without sign change: substitute u = 1/w, integrand bounded.
  double smooth_segment(double a, double b) const {
    if (b <= a) return 0.0;
    if (imag) {
      auto g = [this](double u) { return std::sin(phase_of(1.0 / u, eta) * tau); };
      return integrate_u(g, 1.0 / b, 1.0 / a);
    }
    // cos = 1 - 2 sin^2(x/2): the constant part is exact and dominates for small a.
    auto g = [this](double u) {
      const double s = std::sin(0.5 * phase_of(1.0 / u, eta) * tau);
      return 2.0 * s * s;
    };
    return (1.0 / a - 1.0 / b) - integrate_u(g, 1.0 / b, 1.0 / a);
  }

  double lobe(double k) const {
    return quad::integrate([this](double w) { return f(w); }, boundary(k), boundary(k + 1), cfg).value;
  }

  // First zero index with boundary >= a.
  double first_index(double a) const {
    return std::ceil((phase_of(a, eta) * tau - offset()) / units::pi);
  }

  double to_infinity(double a) const {
    const double k0 = first_index(a);
    const double head = smooth_segment(a, boundary(k0));
    auto term = [this, k0](int k) { return lobe(k0 + k); };
    return head + quad::sum_alternating(term, cfg).value;
  }

  double between(double a, double b) const {
    const double k0 = first_index(a);
    const double k1 = std::floor((phase_of(b, eta) * tau - offset()) / units::pi);
    if (k1 < k0) return smooth_segment(a, b);
    if (k1 - k0 > 64.0) return to_infinity(a) - to_infinity(b);
    double sum = smooth_segment(a, boundary(k0));
    for (double k = k0; k < k1; k += 1.0) sum += lobe(k);
    return sum + quad::integrate([this](double w) { return f(w); }, boundary(k1), b, cfg).value;
  }
};

complex closed_form(double tau, const ContinuumParams& cp) {
  const double w0 = cp.omega0, wB = cp.omegaB, eta = cp.eta;
  const bool open = std::isinf(wB);
  const double pref = open ? w0 : w0 * wB / (wB - w0);
  const double x0 = phase_of(w0, eta) * tau;

  complex first;
  if (open) {
    first = std::polar(1.0, x0);
  } else {
    const double xB = phase_of(wB, eta) * tau;
    first = (wB * std::polar(1.0, x0) - w0 * std::polar(1.0, xB)) / (wB - w0);
  }

  const double se = std::sqrt(eta);
  const double st = std::sqrt(tau);
  const double t0 = (w0 * se + 0.5 / se) * st;
  const double dC = (open ? specfun::fresnel_limit : specfun::fresnel_c((wB * se + 0.5 / se) * st)) -
                    specfun::fresnel_c(t0);
  const double dS = (open ? specfun::fresnel_limit : specfun::fresnel_s((wB * se + 0.5 / se) * st)) -
                    specfun::fresnel_s(t0);
  const complex fres = 2.0 * std::sqrt(eta * tau) * std::polar(1.0, -tau / (4.0 * eta)) *
                       complex(-dS, dC);

  const double beta = 4.0 * eta / tau;
  double siB, ciB;
  if (open) {
    siB = 0.5 * units::pi + specfun::sin_integral_mod(beta, inf);
    ciB = 0.0;
  } else {
    const double xB = phase_of(wB, eta) * tau;
    siB = specfun::sin_integral(xB) + specfun::sin_integral_mod(beta, xB);
    ciB = specfun::cos_integral(xB) + specfun::cos_integral_mod(beta, xB);
  }
  const double si0 = specfun::sin_integral(x0) + specfun::sin_integral_mod(beta, x0);
  const double ci0 = specfun::cos_integral(x0) + specfun::cos_integral_mod(beta, x0);
  const complex trig(-0.5 * tau * (siB - si0), 0.5 * tau * (ciB - ci0));

  return std::polar(1.0, cp.C0 * tau) * (first + pref * (fres + trig));
}

complex by_quadrature(double tau, const ContinuumParams& cp, quad::QuadratureConfig cfg) {
  const bool open = std::isinf(cp.omegaB);
  const double pref = open ? cp.omega0 : cp.omega0 * cp.omegaB / (cp.omegaB - cp.omega0);
  // Tolerances are meant for gamma, which is pref times the integral.
  cfg.abs_tol /= pref;
  complex I;
  for (bool imag : {false, true}) {
    PartIntegrator part{tau, cp.eta, imag, cfg};
    const double v = open ? part.to_infinity(cp.omega0) : part.between(cp.omega0, cp.omegaB);
    if (imag)
      I.imag(v);
    else
      I.real(v);
  }
  return std::polar(1.0, cp.C0 * tau) * pref * I;
}

}  // namespace

ContinuumParams ContinuumParams::from_coefficients(const PotentialCoefficients& c, double r_outer,
                                                   double r_blockade) {
  if (!(c.C3 > 0.0)) throw DomainError("continuum average needs C3 > 0");
  if (!(c.C6 >= 0.0)) throw DomainError("continuum average needs C6 >= 0");
  if (!(r_outer > 0.0)) throw DomainError("continuum average needs a positive outer radius");
  if (!(r_blockade >= 0.0 && r_blockade < r_outer))
    throw DomainError("continuum average needs 0 <= r_blockade < r_outer");
  ContinuumParams cp;
  cp.omega0 = c.C3 / (r_outer * r_outer * r_outer);
  cp.omegaB = r_blockade > 0.0 ? c.C3 / (r_blockade * r_blockade * r_blockade) : inf;
  cp.eta = c.C6 / (c.C3 * c.C3);
  cp.C0 = c.C0;
  return cp;
}

complex gamma_continuum(double tau, const ContinuumParams& cp, ContinuumMethod method,
                        const quad::QuadratureConfig& cfg) {
  if (!(tau >= 0.0)) throw DomainError("gamma_continuum: tau must be >= 0");
  if (!(cp.omega0 > 0.0 && cp.omega0 < cp.omegaB))
    throw DomainError("gamma_continuum: need 0 < omega0 < omegaB");
  if (tau == 0.0) return {1.0, 0.0};
  if (method == ContinuumMethod::quadrature) {
    if (!(cp.eta >= 0.0)) throw DomainError("gamma_continuum: eta must be >= 0");
    return by_quadrature(tau, cp, cfg);
  }
  if (!(cp.eta > 0.0)) throw DomainError("gamma_continuum: closed form needs eta > 0");
  try {
    return closed_form(tau, cp);
  } catch (const DomainError& e) {
    throw DomainError(std::string("gamma_continuum closed form at tau=") + std::to_string(tau) +
                      ": " + e.what());
  }
}

complex gamma_continuum(double tau, const PotentialCoefficients& c, double r_outer,
                        double r_blockade, ContinuumMethod method,
                        const quad::QuadratureConfig& cfg) {
  if (c.C3 == 0.0 && c.C6 == 0.0) return std::polar(1.0, c.C0 * tau);
  return gamma_continuum(tau, ContinuumParams::from_coefficients(c, r_outer, r_blockade), method,
                         cfg);
}

}  // namespace rydcav::ramsey
