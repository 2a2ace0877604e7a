#include "rydcav/pairham.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rydcav/errors.hpp"

namespace rydcav {
namespace {

constexpr double sqrt2 = 1.41421356237309504880;

}  // namespace

PairHamiltonian build_full(const PairLevels& lv, const PairCouplings& c) {
  enum { df1, fd1, ff2, pf0, fp0, dd0 };
  Matrix h(6);
  const double e = 2.0 * lv.omega_d;
  h(df1, df1) = e - lv.delta;
  h(fd1, fd1) = e - lv.delta;
  h(ff2, ff2) = e - 2.0 * lv.delta;
  h(pf0, pf0) = e - lv.Delta;
  h(fp0, fp0) = e - lv.Delta;
  h(dd0, dd0) = e;

  h.set_symmetric(df1, fd1, c.J);
  h.set_symmetric(df1, ff2, sqrt2 * c.g1a);
  h.set_symmetric(df1, pf0, c.g1b);
  h.set_symmetric(df1, dd0, c.g2a);
  h.set_symmetric(fd1, ff2, sqrt2 * c.g2a);
  h.set_symmetric(fd1, fp0, c.g2b);
  h.set_symmetric(fd1, dd0, c.g1a);
  h.set_symmetric(pf0, dd0, c.U);
  h.set_symmetric(fp0, dd0, c.U);

  return {std::move(h), {"df1", "fd1", "ff2", "pf0", "fp0", "dd0"}, lv, c};
}

PairHamiltonian build_reduced(const PairLevels& lv, const PairCouplings& c) {
  if (c.g1a != c.g2a || c.g1b != c.g2b)
    throw ContractError("build_reduced: couplings differ between the two sites");
  Matrix h(4);
  const double e = 2.0 * lv.omega_d;
  h(0, 0) = e - lv.delta + c.J;
  h(1, 1) = e - 2.0 * lv.delta;
  h(2, 2) = e - lv.Delta;
  h(3, 3) = e;
  h.set_symmetric(0, 1, 2.0 * c.g1a);
  h.set_symmetric(0, 2, c.g1b);
  h.set_symmetric(0, 3, sqrt2 * c.g1a);
  h.set_symmetric(2, 3, sqrt2 * c.U);
  return {std::move(h), {"(df1+fd1)/sqrt2", "ff2", "(pf0+fp0)/sqrt2", "dd0"}, lv, c};
}

PairCouplings couplings_at(const PhysicalParams& p, double r, double theta) {
  if (!(r > 0.0)) throw DomainError("couplings_at: separation must be positive");
  const double f = angular_factor(theta) / (r * r * r);
  const double ga = cavity_coupling(p, Transition::a);
  const double gb = cavity_coupling(p, Transition::b);
  return {exchange_u_prefactor(p) * f, exchange_j_prefactor(p) * f, ga, gb, ga, gb};
}

PerturbationResult rs_perturbation_order4(const std::vector<double>& h0, const Matrix& v,
                                          std::size_t target, double degeneracy_tol) {
  const std::size_t n = h0.size();
  if (v.size() != n || target >= n) throw ContractError("rs_perturbation_order4: size mismatch");
  if (v(target, target) != 0.0)
    throw ContractError("rs_perturbation_order4: first-order shift must vanish");

  // Energy denominators E_target - E_k; the target slot is never used.
  std::vector<double> den(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == target) continue;
    den[k] = h0[target] - h0[k];
    if (!(std::abs(den[k]) > degeneracy_tol)) {
      std::ostringstream msg;
      msg << "rs_perturbation_order4: state " << k << " is degenerate with target " << target
          << " (|E_t - E_k| = " << std::abs(den[k]) << ")";
      throw DegeneracyError(msg.str(), static_cast<int>(target), static_cast<int>(k));
    }
  }
  const auto off = [&](std::size_t i, std::size_t j) { return i == j ? 0.0 : v(i, j); };

  PerturbationResult r;
  double renorm = 0.0;
  for (std::size_t n1 = 0; n1 < n; ++n1) {
    if (n1 == target) continue;
    const double v0n = off(target, n1);
    r.dE2 += v0n * v0n / den[n1];
    renorm += v0n * v0n / (den[n1] * den[n1]);
  }
  for (std::size_t n1 = 0; n1 < n; ++n1) {
    if (n1 == target || off(target, n1) == 0.0) continue;
    for (std::size_t n2 = 0; n2 < n; ++n2) {
      if (n2 == target) continue;
      const double path2 = off(target, n1) * off(n1, n2) / (den[n1] * den[n2]);
      if (path2 == 0.0) continue;
      r.dE3 += path2 * off(n2, target);
      for (std::size_t n3 = 0; n3 < n; ++n3) {
        if (n3 == target) continue;
        r.dE4 += path2 * off(n2, n3) * off(n3, target) / den[n3];
      }
    }
  }
  r.dE4 -= r.dE2 * renorm;
  r.dE_total = r.dE1 + r.dE2 + r.dE3 + r.dE4;
  return r;
}

PerturbationResult rs_perturbation_order4(const PairHamiltonian& h) {
  const std::size_t n = h.matrix.size();
  std::vector<double> h0(n);
  Matrix v = h.matrix;
  for (std::size_t i = 0; i < n; ++i) {
    h0[i] = h.matrix(i, i);
    v(i, i) = 0.0;
  }
  const double tol = 1e-9 * std::max(std::abs(h.levels.delta), std::abs(h.levels.Delta));
  return rs_perturbation_order4(h0, v, h.dd0_index(), tol);
}

PerturbationResult perturbation_closed_form(const PairLevels& lv, const PairCouplings& c) {
  const double d = lv.delta;
  const double D = lv.Delta;
  const double d2 = d * d;
  const double d3 = d2 * d;
  const double U = c.U;
  const double J = c.J;
  const double a1 = c.g1a, a2 = c.g2a, b1 = c.g1b, b2 = c.g2b;
  const double a1s = a1 * a1, a2s = a2 * a2;

  PerturbationResult r;
  r.dE2 = a1s / d + a2s / d + 2.0 * U * U / D;
  r.dE3 = 2.0 * (a1 * b2 + a2 * b1) * U / (D * d) + 2.0 * a1 * a2 * J / d2;
  r.dE4 = ((a1 * b2) * (a1 * b2) + (a2 * b1) * (a2 * b1)) / (d2 * D) +
          2.0 * a1s * a2s / d3 -
          2.0 * U * U * (a1s + a2s) / (D * d) * (1.0 / D + 1.0 / d) +
          U * U * (b1 * b1 + b2 * b2) / (D * D * d) -
          4.0 * U * U * U * U / (D * D * D) -
          a1s * a1s / d3 - a2s * a2s / d3 +
          2.0 * J * U * (a1 * b1 + a2 * b2) / (d2 * D) +
          (a1s + a2s) * J * J / d3;
  r.dE_total = r.dE1 + r.dE2 + r.dE3 + r.dE4;
  r.stark_shift_1 = a1s / d - a1s * a1s / d3;
  r.stark_shift_2 = a2s / d - a2s * a2s / d3;
  r.pair_interaction = effective_pair_interaction(d, D, c);
  return r;
}

double effective_pair_interaction(double d, double D, const PairCouplings& c) {
  const double cross_ab = c.g1a * c.g2b;
  const double cross_ba = c.g1b * c.g2a;
  const double aa = c.g1a * c.g2a;
  const double half = c.U * c.U / D + c.U * (cross_ab + cross_ba) / (D * d) +
                      (cross_ab * cross_ab + cross_ba * cross_ba) / (2.0 * D * d * d) +
                      c.J * aa / (d * d) + aa * aa / (d * d * d);
  return 2.0 * half;
}

PairInteraction effective_pair_interaction(const PhysicalParams& p, const PairCouplings& c,
                                           double threshold) {
  const auto gate = validate_perturbative(p, c.U, c.J, threshold);
  return {effective_pair_interaction(p.cavity_detuning(), p.forster_detuning(), c), !gate.pass};
}

DressedShift dressed_dd0_shift(const PairHamiltonian& h) {
  const auto eig = eigen_symmetric(h.matrix);
  const std::size_t t = h.dd0_index();
  DressedShift best;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const double w = eig.vectors(t, k) * eig.vectors(t, k);
    if (w > best.overlap) best = {eig.values[k] - h.matrix(t, t), w, k};
  }
  if (best.overlap < 0.5)
    throw DegeneracyError("dressed_dd0_shift: no eigenstate with |dd0> weight above 0.5",
                          static_cast<int>(t), static_cast<int>(best.eigen_index));
  return best;
}

}  // namespace rydcav
