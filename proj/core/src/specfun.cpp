#include "rydcav/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "rydcav/errors.hpp"

namespace rydcav::specfun {
namespace {

constexpr double pi = std::numbers::pi;
constexpr double euler_gamma = std::numbers::egamma;
constexpr double eps = std::numeric_limits<double>::epsilon();

// Power series of S and C, used below x = 2.
double fresnel_series(double x, bool sine) {
  const double x2 = x * x;
  const double x4 = x2 * x2;
  // term_n = (-1)^n x^(4n+p) / (m! (4n+p)) with p = 3, m = 2n+1 (sine) or p = 1, m = 2n (cosine)
  double power = sine ? x2 * x : x;
  double fact = 1.0;
  int m = sine ? 1 : 0;
  double sum = 0.0;
  for (int n = 0; n < 60; ++n) {
    const double p = sine ? 4.0 * n + 3.0 : 4.0 * n + 1.0;
    const double t = power / (fact * p);
    sum += (n % 2 == 0) ? t : -t;
    if (std::abs(t) < eps * std::abs(sum)) break;
    power *= x4;
    fact *= static_cast<double>(m + 1) * static_cast<double>(m + 2);
    m += 2;
  }
  return sum;
}

// int_x^inf sin(t^2) dt (sine) or cos(t^2) dt, via u = t^2 and lobes of the trig factor.
double fresnel_tail(double x, bool sine, const QuadratureConfig& cfg) {
  const double u0 = x * x;
  quad::Integrand f = sine ? quad::Integrand([](double u) { return std::sin(u) / std::sqrt(u); })
                           : quad::Integrand([](double u) { return std::cos(u) / std::sqrt(u); });
  const double offset = sine ? 0.0 : 0.5 * pi;
  return 0.5 * quad::integrate_oscillatory_tail(f, u0, offset, pi, cfg).value;
}

double fresnel(double x, bool sine, const QuadratureConfig& cfg) {
  const double ax = std::abs(x);
  double v = 0.0;
  if (ax < 2.0) {
    v = fresnel_series(ax, sine);
  } else {
    v = fresnel_limit - fresnel_tail(ax, sine, cfg);
  }
  return x < 0.0 ? -v : v;
}

struct CiSi {
  double ci, si;
};

// Series for x <= 2, continued fraction of E1(ix) beyond (modified Lentz).
CiSi cisi(double x) {
  if (x <= 2.0) {
    double si = 0.0;
    double ci = 0.0;
    double term = 1.0;  // x^k / k!
    for (int k = 1; k < 100 && term > 1e-18 * x * eps; ++k) {
      term *= x / k;
      const double t = term / k;
      if (k % 2 == 1) {
        si += ((k / 2) % 2 == 0) ? t : -t;
      } else {
        ci += ((k / 2) % 2 == 1) ? -t : t;
      }
    }
    return {euler_gamma + std::log(x) + ci, si};
  }
  using cd = std::complex<double>;
  constexpr double tiny = 1e-300;
  cd b(1.0, x);
  cd c(1.0 / tiny, 0.0);
  cd d = 1.0 / b;
  cd h = d;
  for (int i = 2; i < 100000; ++i) {
    const double a = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cd del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps) break;
  }
  h *= cd(std::cos(x), -std::sin(x));
  return {-h.real(), 0.5 * pi + h.imag()};
}

void check_beta(double beta, const char* who) {
  if (!(beta >= 0.0)) throw DomainError(std::string(who) + ": beta must be non-negative");
}

// Si_M over [0, min(x, pi)] with t = s^2 to tame the 1/sqrt(beta t) edge at large beta.
double si_mod_head(double beta, double upper, const QuadratureConfig& cfg) {
  const auto g = [beta](double s) {
    if (s == 0.0) return 0.0;
    const double t = s * s;
    return 2.0 * std::sin(t) / (s * std::sqrt(beta * t + 1.0));
  };
  return quad::integrate(g, 0.0, std::sqrt(upper), cfg).value;
}

double si_mod_integrand(double beta, double t) {
  return std::sin(t) / (t * std::sqrt(beta * t + 1.0));
}

double si_mod_infinity(double beta, const QuadratureConfig& cfg) {
  if (std::isinf(beta)) return 0.0;
  const double head = si_mod_head(beta, pi, cfg);
  const auto f = [beta](double t) { return si_mod_integrand(beta, t); };
  return head + quad::integrate_oscillatory_tail(f, pi, 0.0, pi, cfg).value;
}

}  // namespace

double fresnel_s(double x, const QuadratureConfig& cfg) { return fresnel(x, true, cfg); }
double fresnel_c(double x, const QuadratureConfig& cfg) { return fresnel(x, false, cfg); }

double sin_integral(double x) {
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return std::copysign(0.5 * pi, x);
  const double v = cisi(std::abs(x)).si;
  return x < 0.0 ? -v : v;
}

double cos_integral(double x) {
  if (!(x > 0.0)) throw DomainError("cos_integral: argument must be positive");
  if (std::isinf(x)) return 0.0;
  return cisi(x).ci;
}

double sin_integral_mod(double beta, double x, const QuadratureConfig& cfg) {
  check_beta(beta, "sin_integral_mod");
  if (!(x >= 0.0)) throw DomainError("sin_integral_mod: x must be non-negative");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return si_mod_infinity(beta, cfg);

  constexpr double direct_limit = 24.0 * pi;
  const double head_end = std::min(x, pi);
  double sum = si_mod_head(beta, head_end, cfg);
  if (x <= pi) return sum;
  const auto f = [beta](double t) { return si_mod_integrand(beta, t); };
  if (x <= direct_limit) {
    for (double lo = pi; lo < x; lo += pi) sum += quad::integrate(f, lo, std::min(lo + pi, x), cfg).value;
    return sum;
  }
  return si_mod_infinity(beta, cfg) - quad::integrate_oscillatory_tail(f, x, 0.0, pi, cfg).value;
}

double cos_integral_mod(double beta, double x, const QuadratureConfig& cfg) {
  check_beta(beta, "cos_integral_mod");
  if (!(x > 0.0)) throw DomainError("cos_integral_mod: argument must be positive");
  if (std::isinf(x)) return 0.0;
  const auto f = [beta](double t) { return std::cos(t) / (t * std::sqrt(beta * t + 1.0)); };
  if (x >= 1.0) return -quad::integrate_oscillatory_tail(f, x, 0.5 * pi, pi, cfg).value;

  // Below 1 split off the logarithm: int_x^1 c(t)/t = int_x^1 (c(t) - 1)/t - ln x.
  const auto regular = [beta](double t) {
    return (std::cos(t) / std::sqrt(beta * t + 1.0) - 1.0) / t;
  };
  const double near = quad::integrate(regular, x, 1.0, cfg).value;
  const double tail = quad::integrate_oscillatory_tail(f, 1.0, 0.5 * pi, pi, cfg).value;
  return -near + std::log(x) - tail;
}

double f_tau(double eta, double tau, const QuadratureConfig& cfg) {
  if (!(eta > 0.0)) throw DomainError("f_tau: eta must be positive");
  if (!(tau >= 0.0)) throw DomainError("f_tau: tau must be non-negative");
  if (tau == 0.0) return 0.0;
  return si_mod_infinity(4.0 * eta / tau, cfg);
}

}  // namespace rydcav::specfun
