#include "rydcav/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "rydcav/errors.hpp"
#include "rydcav/rng.hpp"
#include "rydcav/units.hpp"

namespace rydcav::ramsey {

using complex = std::complex<double>;

double packing_fraction(const RamseyConfig& cfg) {
  const double half = 0.5 * cfg.blockade_radius;
  const double R = cfg.sphere_radius();
  return cfg.N * half * half * half / (R * R * R);
}

namespace {

// Uniform grid with cell size equal to the exclusion radius.
class ExclusionGrid {
 public:
  explicit ExclusionGrid(double cell) : cell_(cell) {}

  bool clear(const Position& p, const std::vector<Position>& pts) const {
    const auto c = cell_of(p);
    const double r2 = cell_ * cell_;
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy)
        for (long dz = -1; dz <= 1; ++dz) {
          auto it = cells_.find(key(c[0] + dx, c[1] + dy, c[2] + dz));
          if (it == cells_.end()) continue;
          for (std::size_t i : it->second) {
            const auto& q = pts[i];
            const double ex = p[0] - q[0], ey = p[1] - q[1], ez = p[2] - q[2];
            if (ex * ex + ey * ey + ez * ez < r2) return false;
          }
        }
    return true;
  }

  void insert(const Position& p, std::size_t index) {
    const auto c = cell_of(p);
    cells_[key(c[0], c[1], c[2])].push_back(index);
  }

 private:
  std::array<long, 3> cell_of(const Position& p) const {
    return {static_cast<long>(std::floor(p[0] / cell_)), static_cast<long>(std::floor(p[1] / cell_)),
            static_cast<long>(std::floor(p[2] / cell_))};
  }
  static std::uint64_t key(long x, long y, long z) {
    auto u = [](long v) { return static_cast<std::uint64_t>(v + (1L << 20)) & 0x1FFFFFULL; };
    return (u(x) << 42) | (u(y) << 21) | u(z);
  }

  double cell_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

Position draw_in_sphere(CounterRng& rng, double R) {
  const double r = R * std::cbrt(rng.next_unit());
  const double cos_t = 2.0 * rng.next_unit() - 1.0;
  const double phi = units::two_pi * rng.next_unit();
  const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
  return {r * sin_t * std::cos(phi), r * sin_t * std::sin(phi), r * cos_t};
}

double distance(const Position& a, const Position& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

}  // namespace

EnsembleRealization sample_ensemble(const RamseyConfig& cfg, std::uint64_t stream) {
  cfg.validate();
  if (packing_fraction(cfg) > 0.3)
    throw DomainError("sample_ensemble: blockade radius too large, packing fraction " +
                      std::to_string(packing_fraction(cfg)) + " exceeds 0.3");
  EnsembleRealization out;
  out.sphere_radius = cfg.sphere_radius();
  out.seed = cfg.seed;
  out.stream = stream;
  out.positions.reserve(cfg.N);
  CounterRng rng(cfg.seed, stream);

  const bool exclude = cfg.blockade_radius > 0.0;
  ExclusionGrid grid(exclude ? cfg.blockade_radius : 1.0);
  const std::uint64_t max_rejections = 1000ULL * static_cast<std::uint64_t>(cfg.N);

  std::size_t first = 0;
  if (cfg.geometry == Geometry::central_probe) {
    out.positions.push_back({0.0, 0.0, 0.0});
    if (exclude) grid.insert(out.positions[0], 0);
    first = 1;
  }
  for (std::size_t i = first; i < static_cast<std::size_t>(cfg.N); ++i) {
    for (;;) {
      const Position p = draw_in_sphere(rng, out.sphere_radius);
      if (!exclude || grid.clear(p, out.positions)) {
        if (exclude) grid.insert(p, out.positions.size());
        out.positions.push_back(p);
        break;
      }
      if (++out.rejected > max_rejections)
        throw DomainError("sample_ensemble: exclusion sampling did not converge");
    }
  }
  return out;
}

std::vector<complex> g_exact_series(const std::vector<Position>& positions,
                                    const PotentialCoefficients& c, double p_g, double p_d,
                                    const std::vector<double>& taus, InteractionMode mode,
                                    Geometry geometry) {
  const std::size_t n = positions.size();
  const std::size_t T = taus.size();
  if (n < 2) throw DomainError("g_exact: need at least two atoms");

  auto energy = [&](std::size_t j, std::size_t k) {
    const double r = distance(positions[j], positions[k]);
    if (r == 0.0)
      throw DomainError("g_exact: atoms " + std::to_string(j) + " and " + std::to_string(k) +
                        " coincide");
    return pair_energy(r, c, mode);
  };

  std::vector<complex> result(T, complex(0.0, 0.0));
  if (geometry == Geometry::central_probe) {
    std::vector<complex> G(T, complex(1.0, 0.0));
    for (std::size_t k = 1; k < n; ++k) {
      const double u = energy(0, k);
      for (std::size_t t = 0; t < T; ++t) G[t] *= p_g + p_d * std::polar(1.0, u * taus[t]);
    }
    result = G;
  } else {
    // Row j holds atom j's running product; each pair updates both rows in
    // partner-index order.
    std::vector<complex> G(n * T, complex(1.0, 0.0));
    std::vector<complex> z(T);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const double u = energy(j, k);
        for (std::size_t t = 0; t < T; ++t) z[t] = p_g + p_d * std::polar(1.0, u * taus[t]);
        complex* gj = &G[j * T];
        complex* gk = &G[k * T];
        for (std::size_t t = 0; t < T; ++t) {
          gj[t] *= z[t];
          gk[t] *= z[t];
        }
      }
    for (std::size_t t = 0; t < T; ++t) {
      complex sum(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) sum += G[j * T + t];
      result[t] = sum / static_cast<double>(n);
    }
  }
  for (std::size_t t = 0; t < T; ++t)
    if (taus[t] == 0.0) result[t] = complex(1.0, 0.0);
  return result;
}

complex g_exact(const std::vector<Position>& positions, const PotentialCoefficients& c, double p_g,
                double p_d, double tau, InteractionMode mode, Geometry geometry) {
  return g_exact_series(positions, c, p_g, p_d, {tau}, mode, geometry).front();
}

complex g_from_pair_energies(const std::vector<std::vector<double>>& energies, double p_g,
                             double p_d, double tau) {
  const std::size_t n = energies.size();
  if (n < 2) throw DomainError("g_from_pair_energies: need at least two atoms");
  if (tau == 0.0) return {1.0, 0.0};
  complex sum(0.0, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (energies[j].size() != n) throw ContractError("g_from_pair_energies: matrix must be square");
    complex G(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) G *= p_g + p_d * std::polar(1.0, energies[j][k] * tau);
    sum += G;
  }
  return sum / static_cast<double>(n);
}

std::vector<double> unwrap_phase(const std::vector<double>& wrapped) {
  std::vector<double> out(wrapped.size());
  double shift = 0.0;
  for (std::size_t i = 0; i < wrapped.size(); ++i) {
    if (i > 0 && std::isfinite(wrapped[i]) && std::isfinite(wrapped[i - 1])) {
      const double d = wrapped[i] - wrapped[i - 1];
      shift -= units::two_pi * std::round(d / units::two_pi);
    }
    out[i] = wrapped[i] + shift;
  }
  return out;
}

RamseySeries aggregate(const std::vector<double>& taus, std::vector<std::vector<complex>> per) {
  RamseySeries s;
  const std::size_t M = per.size();
  const std::size_t T = taus.size();
  if (M == 0) throw ContractError("aggregate: no realizations");
  s.tau = taus;
  s.realizations = static_cast<int>(M);
  s.G.resize(T);
  s.contrast.resize(T);
  s.contrast_stderr.resize(T);
  s.mean_contrast.resize(T);
  s.mean_contrast_stderr.resize(T);
  std::vector<double> wrapped(T);
  const double m = static_cast<double>(M);
  for (std::size_t t = 0; t < T; ++t) {
    complex sum(0.0, 0.0);
    double abs_sum = 0.0;
    for (std::size_t r = 0; r < M; ++r) {
      sum += per[r][t];
      abs_sum += std::abs(per[r][t]);
    }
    const complex mean = sum / m;
    s.G[t] = mean;
    s.contrast[t] = std::abs(mean);
    s.mean_contrast[t] = abs_sum / m;
    wrapped[t] = std::arg(mean);
    const complex dir = s.contrast[t] > 0.0 ? mean / s.contrast[t] : complex(1.0, 0.0);
    double var_p = 0.0, var_a = 0.0;
    for (std::size_t r = 0; r < M; ++r) {
      const double proj = (per[r][t] * std::conj(dir)).real() - s.contrast[t];
      const double a = std::abs(per[r][t]) - s.mean_contrast[t];
      var_p += proj * proj;
      var_a += a * a;
    }
    if (M > 1) {
      s.contrast_stderr[t] = std::sqrt(var_p / (m - 1.0) / m);
      s.mean_contrast_stderr[t] = std::sqrt(var_a / (m - 1.0) / m);
    }
  }
  s.phase = unwrap_phase(wrapped);
  s.per_realization = std::move(per);
  return s;
}

RamseySeries monte_carlo_contrast(const RamseyConfig& cfg, const PotentialCoefficients& c) {
  cfg.validate();
  if (packing_fraction(cfg) > 0.3)
    throw DomainError("monte_carlo_contrast: packing fraction exceeds 0.3");
  const int M = cfg.realizations;
  std::vector<std::vector<complex>> per(M);

  int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, M);

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= M) return;
      try {
        const auto ens = sample_ensemble(cfg, static_cast<std::uint64_t>(r));
        per[r] = g_exact_series(ens.positions, c, cfg.p_g, cfg.p_d, cfg.tau_grid, cfg.mode,
                                cfg.geometry);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(M);
        return;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return aggregate(cfg.tau_grid, std::move(per));
}

void write_series_csv(std::ostream& out, const RamseySeries& s) {
  out << "tau[us],contrast,contrast_stderr,phase[rad],re_G,im_G,mean_contrast,mean_contrast_stderr\n";
  char buf[512];
  for (std::size_t t = 0; t < s.tau.size(); ++t) {
    std::snprintf(buf, sizeof buf, "%.16e,%.16e,%.16e,%.16e,%.16e,%.16e,%.16e,%.16e\n", s.tau[t],
                  s.contrast[t], s.contrast_stderr[t], s.phase[t], s.G[t].real(), s.G[t].imag(),
                  s.mean_contrast[t], s.mean_contrast_stderr[t]);
    out << buf;
  }
}

}  // namespace rydcav::ramsey
