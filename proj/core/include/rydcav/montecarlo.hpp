#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rydcav/potential.hpp"
#include "rydcav/ramsey.hpp"

namespace rydcav::ramsey {

using Position = std::array<double, 3>;

struct EnsembleRealization {
  std::vector<Position> positions;  // um
  double sphere_radius = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::uint64_t rejected = 0;  // draws discarded by the exclusion radius
};

// Draws one realization for `cfg` from stream `stream`. Points are uniform in the
// sphere (radius R u^(1/3), cos theta = 2u - 1, phi = 2 pi u). With a blockade radius,
// points closer than it to an accepted point are redrawn. In central_probe geometry
// atom 0 sits at the origin.
// Throws DomainError when the packing fraction N (r_B/2)^3 / R^3 exceeds 0.3.
EnsembleRealization sample_ensemble(const RamseyConfig& cfg, std::uint64_t stream);

double packing_fraction(const RamseyConfig& cfg);

// G(tau) for fixed positions on a tau grid. Ensemble geometry averages the per-atom
// products over all atoms; central_probe keeps only atom 0's product.
// Throws DomainError on coincident atoms.
std::vector<std::complex<double>> g_exact_series(const std::vector<Position>& positions,
                                                 const PotentialCoefficients& c, double p_g,
                                                 double p_d, const std::vector<double>& taus,
                                                 InteractionMode mode,
                                                 Geometry geometry = Geometry::ensemble);

std::complex<double> g_exact(const std::vector<Position>& positions, const PotentialCoefficients& c,
                             double p_g, double p_d, double tau, InteractionMode mode,
                             Geometry geometry = Geometry::ensemble);

// Same from a precomputed pair-energy list: energies[j][k] for k != j (symmetric).
std::complex<double> g_from_pair_energies(const std::vector<std::vector<double>>& energies,
                                          double p_g, double p_d, double tau);

struct RamseySeries {
  std::vector<double> tau;
  std::vector<std::complex<double>> G;       // mean of complex G over realizations
  std::vector<double> contrast;              // |mean G|
  std::vector<double> contrast_stderr;       // stderr of the projection onto mean G
  std::vector<double> mean_contrast;         // mean of |G|
  std::vector<double> mean_contrast_stderr;
  std::vector<double> phase;                 // unwrapped arg(mean G)
  std::vector<std::vector<std::complex<double>>> per_realization;  // [realization][tau]
  int realizations = 0;
  std::string config_hash;

  bool operator==(const RamseySeries&) const = default;
};

// Runs cfg.realizations independent draws (threads over realizations) and merges
// them in realization order, so the result does not depend on scheduling.
RamseySeries monte_carlo_contrast(const RamseyConfig& cfg, const PotentialCoefficients& c);

// Aggregates per-realization series (used by monte_carlo_contrast).
RamseySeries aggregate(const std::vector<double>& taus,
                       std::vector<std::vector<std::complex<double>>> per_realization);

// Adds 2 pi multiples so consecutive entries differ by at most pi.
std::vector<double> unwrap_phase(const std::vector<double>& wrapped);

// CSV with header "tau[us],contrast,contrast_stderr,phase[rad],re_G,im_G,
// mean_contrast,mean_contrast_stderr"; values as %.16e.
void write_series_csv(std::ostream& out, const RamseySeries& s);

}  // namespace rydcav::ramsey
