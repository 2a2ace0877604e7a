#include "rydcav/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace rydcav::quad {
namespace {

constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208292139407, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a, b, value, error;
};

Segment gk21(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = wgk[10] * fc;
  double gauss = 0.0;
  for (int j = 0; j < 10; ++j) {
    const double dx = half * xgk[j];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += wgk[j] * fsum;
    if (j % 2 == 1) gauss += wg[j / 2] * fsum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  if (a == b) return {};
  std::vector<Segment> segs{gk21(f, a, b)};
  double total = segs.front().value;
  double err = segs.front().error;
  while (err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) &&
         static_cast<int>(segs.size()) < cfg.max_subdivisions) {
    auto worst = std::max_element(segs.begin(), segs.end(),
                                  [](const Segment& x, const Segment& y) { return x.error < y.error; });
    const Segment s = *worst;
    const double mid = 0.5 * (s.a + s.b);
    if (mid <= s.a || mid >= s.b) break;  // interval exhausted at double resolution
    *worst = gk21(f, s.a, mid);
    segs.push_back(gk21(f, mid, s.b));
    total = 0.0;
    err = 0.0;
    for (const auto& g : segs) {
      total += g.value;
      err += g.error;
    }
  }
  return {total, err, static_cast<int>(segs.size()),
          err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))};
}

namespace {

// Cohen-Villegas-Zagier acceleration of sum_k (-1)^k a_k over n terms.
double cvz_sum(const std::vector<double>& a, std::size_t n) {
  double d = std::pow(3.0 + std::sqrt(8.0), static_cast<double>(n));
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    c = b - c;
    s += c * a[k];
    const double kk = static_cast<double>(k);
    const double nn = static_cast<double>(n);
    b = (kk + nn) * (kk - nn) * b / ((kk + 0.5) * (kk + 1.0));
  }
  return s / d;
}

}  // namespace

QuadResult sum_alternating(const std::function<double(int)>& term, const QuadratureConfig& cfg,
                           int lead) {
  QuadResult out;
  for (int k = 0; k < lead; ++k) out.value += term(k);

  // a_k with the alternating sign factored out: term(lead + k) = (-1)^k a_k.
  constexpr std::size_t max_terms = 40;
  std::vector<double> a;
  a.reserve(max_terms);
  double previous = 0.0;
  for (std::size_t n = 1; n <= max_terms && static_cast<int>(n) <= cfg.max_lobes; ++n) {
    const double t = term(lead + static_cast<int>(n) - 1);
    a.push_back((n % 2 == 1) ? t : -t);
    if (std::abs(t) < 0.1 * cfg.abs_tol) {
      // Alternating remainder is bounded by the first omitted term.
      double direct = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) direct += (k % 2 == 0) ? a[k] : -a[k];
      out.value += direct;
      out.error = std::abs(t);
      return out;
    }
    if (n < 8 || n % 4 != 0) continue;
    const double estimate = cvz_sum(a, n);
    const double change = std::abs(estimate - previous);
    previous = estimate;
    if (n >= 16 && change <= 0.1 * std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value + estimate))) {
      out.value += estimate;
      out.error = change;
      return out;
    }
  }
  out.value += previous;
  out.error = std::abs(previous - cvz_sum(a, a.size() - 4));
  out.converged = out.error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
  return out;
}

QuadResult integrate_oscillatory_tail(const Integrand& f, double a, double offset, double period,
                                      const QuadratureConfig& cfg) {
  const double k0 = std::ceil((a - offset) / period);
  const double first_zero = offset + k0 * period;
  QuadratureConfig lobe_cfg = cfg;
  lobe_cfg.abs_tol = 0.01 * cfg.abs_tol;
  QuadResult head = integrate(f, a, first_zero, lobe_cfg);
  QuadResult tail = sum_alternating(
      [&](int k) {
        const double lo = first_zero + k * period;
        return integrate(f, lo, lo + period, lobe_cfg).value;
      },
      cfg, 0);
  return {head.value + tail.value, head.error + tail.error, head.intervals,
          head.converged && tail.converged};
}

}  // namespace rydcav::quad
