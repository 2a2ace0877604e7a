#include "rydcav/potential.hpp"

#include <cmath>

#include "rydcav/errors.hpp"
#include "rydcav/units.hpp"

namespace rydcav {
namespace {

double r1_from(double C3, double C6) {
  if (C3 == 0.0) return PotentialCoefficients::inf;
  return std::cbrt(std::abs(C6 / C3));
}

}  // namespace

PotentialCoefficients PotentialCoefficients::direct(double C0, double C3, double C6) {
  PotentialCoefficients c;
  c.C0 = C0;
  c.C3 = C3;
  c.C6 = C6;
  c.eta = C3 == 0.0 ? inf : C6 / (C3 * C3);
  c.r1 = r1_from(C3, C6);
  c.r2_numeric = solve_r2(C0, C3, C6);
  return c;
}

PotentialCoefficients coefficients(const PhysicalParams& p) {
  const double d = p.cavity_detuning();
  const double D = p.forster_detuning();
  if (d == 0.0 || D == 0.0) throw DomainError("coefficients: detunings must be nonzero");

  const double ga = cavity_coupling(p, Transition::a);
  const double gb = cavity_coupling(p, Transition::b);
  const double u_pref = exchange_u_prefactor(p);
  const double j_pref = exchange_j_prefactor(p);

  PotentialCoefficients c;
  c.delta = d;
  c.Delta = D;
  c.sign_delta = d > 0.0 ? 1 : -1;
  c.cavity_form = p.mu_a == p.mu_b && p.mode_amplitude == 1.0;
  // Terms of U-tilde grouped by powers of 1/r^3 at equal mode amplitude on both atoms.
  c.C6 = 2.0 * u_pref * u_pref / D;
  c.C3 = 4.0 * u_pref * ga * gb / (D * d) + 2.0 * j_pref * ga * ga / (d * d);
  c.C0 = 2.0 * (ga * gb) * (ga * gb) / (D * d * d) + 2.0 * (ga * ga) * (ga * ga) / (d * d * d);
  c.eta = c.C3 == 0.0 ? PotentialCoefficients::inf : c.C6 / (c.C3 * c.C3);
  c.R = cavity_vdw_radius(p).radius;
  c.r0 = std::sqrt(2.0) * std::cbrt(u_pref / std::abs(D));

  const auto radii = crossover_radii(c);
  c.r1 = radii.r1;
  c.r2 = radii.r2_closed;
  c.r2_numeric = radii.r2_numeric;
  return c;
}

double u_tilde(double r, double theta, const PotentialCoefficients& c, AngularMode mode) {
  if (!(r > 0.0)) throw DomainError("u_tilde: r must be positive");
  const double inv3 = 1.0 / (r * r * r);
  const double f = mode == AngularMode::angular ? angular_factor(theta) : 1.0;
  return c.C0 + f * c.C3 * inv3 + f * f * c.C6 * inv3 * inv3;
}

double u_tilde_cavity_form(double r, const PotentialCoefficients& c) {
  if (!(r > 0.0)) throw DomainError("u_tilde_cavity_form: r must be positive");
  if (!c.cavity_form) throw ContractError("u_tilde_cavity_form: needs equal dipoles and unit mode amplitude");
  const double r3 = r * r * r;
  const double R3 = c.R * c.R * c.R;
  const double ratio = c.Delta / c.delta;
  return c.C6 * (1.0 / (r3 * r3) + (1.0 + 0.5 * ratio) * c.sign_delta / (R3 * r3) +
                 0.25 * (1.0 + ratio) / (R3 * R3));
}

double solve_r2(double C0, double C3, double C6) {
  if (C0 == 0.0) return PotentialCoefficients::inf;
  if (C3 == 0.0 && C6 == 0.0) return 0.0;
  // s = 1/r^3; h(s) = |C3 s + C6 s^2| - |C0| starts negative at s = 0.
  const auto h = [&](double s) { return std::abs(C3 * s + C6 * s * s) - std::abs(C0); };
  double s = PotentialCoefficients::inf;
  if (C3 != 0.0) s = std::min(s, std::abs(C0) / (4.0 * std::abs(C3)));
  if (C6 != 0.0) s = std::min(s, std::sqrt(std::abs(C0) / (4.0 * std::abs(C6))));

  double lo = s;
  double hi = s;
  for (int i = 0; i < 20000 && h(hi) < 0.0; ++i) {
    lo = hi;
    hi *= 1.01;
  }
  if (h(hi) < 0.0) return 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-16 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) < 0.0 ? lo : hi) = mid;
  }
  return 1.0 / std::cbrt(0.5 * (lo + hi));
}

CrossoverRadii crossover_radii(const PotentialCoefficients& c) {
  CrossoverRadii out;
  out.r0 = c.r0;
  out.r2_numeric = solve_r2(c.C0, c.C3, c.C6);
  if (!c.cavity_form || std::isnan(c.R)) {
    out.r1 = r1_from(c.C3, c.C6);
    out.r2_closed = out.r2_printed = PotentialCoefficients::nan;
    return out;
  }
  const double half = 1.0 + c.Delta / (2.0 * c.delta);  // 1 + Delta/(2 delta)
  const double full = 1.0 + c.Delta / c.delta;          // 1 + Delta/delta
  out.r1 = half == 0.0 ? PotentialCoefficients::inf : c.R / std::cbrt(std::abs(half));

  // With x = R^3/r^3 the relation reads |x^2 + a x| = |b|, a = half sgn(delta), b = full/4.
  const double a = half * c.sign_delta;
  const double b = 0.25 * full;
  const double x = 0.5 * (std::sqrt(a * a + 4.0 * std::abs(b)) - a);
  out.r2_closed = x > 0.0 ? c.R / std::cbrt(x) : PotentialCoefficients::inf;
  out.r2_printed = x > 0.0 ? c.R / std::cbrt(2.0 * x) : PotentialCoefficients::inf;
  return out;
}

double special_case_potential(const PotentialCoefficients& c, SpecialDetuning which, double r) {
  if (!(r > 0.0)) throw DomainError("special_case_potential: r must be positive");
  if (!c.cavity_form || std::isnan(c.R))
    throw ContractError("special_case_potential: needs equal dipoles and unit mode amplitude");
  const double r3 = r * r * r;
  const double R3 = c.R * c.R * c.R;
  const double tol = 1e-9 * std::abs(c.Delta);
  switch (which) {
    case SpecialDetuning::half_delta:
      if (std::abs(c.delta + 0.5 * c.Delta) > tol)
        throw ContractError("special_case_potential: delta != -Delta/2");
      return c.C6 * (1.0 / (r3 * r3) - 1.0 / (4.0 * R3 * R3));
    case SpecialDetuning::full_delta:
      if (std::abs(c.delta + c.Delta) > tol)
        throw ContractError("special_case_potential: delta != -Delta");
      return c.C6 * (1.0 / (r3 * r3) + c.sign_delta / (2.0 * R3 * r3));
  }
  throw ContractError("special_case_potential: unknown case");
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::below_validity: return "below_validity";
    case Regime::free_vdw: return "free_vdW";
    case Regime::dipole_dipole: return "dipole_dipole";
    case Regime::all_to_all: return "all_to_all";
  }
  return "?";
}

Regime classify_regime(const PotentialCoefficients& c, double r) {
  if (!(r > 0.0)) throw DomainError("classify_regime: r must be positive");
  const double r0 = std::isnan(c.r0) ? 0.0 : c.r0;
  const double r2 = std::isnan(c.r2_numeric) ? solve_r2(c.C0, c.C3, c.C6) : c.r2_numeric;
  if (r <= r0) return Regime::below_validity;
  if (r < c.r1) return Regime::free_vdw;
  if (r < r2) return Regime::dipole_dipole;
  return Regime::all_to_all;
}

}  // namespace rydcav
