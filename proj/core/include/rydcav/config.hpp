#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rydcav/params.hpp"
#include "rydcav/potential.hpp"
#include "rydcav/ramsey.hpp"

namespace rydcav::config {

// Dimensional fields are objects {"value": x, "unit": "GHz"}; a bare number there is
// rejected with a ConfigError naming the field path (e.g. "physical.omega_d").
// Grids are {"unit": u, "values": [...]} or {"unit": u, "start": a, "stop": b,
// "count": n, "spacing": "linear"|"log"}.

struct Table1Reference {
  double g = 0.0;   // rad/us
  double C0 = 0.0;  // rad/us
  double C3 = 0.0;  // rad/us um^3
  double C6 = 0.0;  // rad/us um^6
};

struct Table1Row {
  std::string name;
  PhysicalParams params;
  Table1Reference reference;
};

struct Scenario {
  std::string name;
  std::string task;  // coeffs, potential, ham-spectrum, ramsey-mc, ramsey-analytic, ramsey-exact,
                     // ramsey-compare, table1-check; may be empty outside scenario runs
  std::optional<PhysicalParams> physical;
  std::optional<PotentialCoefficients> coefficients;  // given directly
  std::optional<ramsey::RamseyConfig> ramsey;
  std::vector<double> r_grid;      // um
  std::vector<double> theta_grid;  // rad
  double perturbative_threshold = 10.0;
  std::vector<Table1Row> table1;
  std::string output_dir;   // empty: caller default
  std::string output_stem;  // file stem, defaults to name
  std::string format = "csv";
  std::string canonical;  // normalized JSON text of the whole config
  std::string hash;       // 16 hex digits, FNV-1a of `canonical`
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::filesystem::path& path);

// Partial documents used by the CLI subcommands.
PhysicalParams parse_physical(const std::string& json_text);
ramsey::RamseyConfig parse_ramsey(const std::string& json_text);

// Physical params -> derived coefficients, or the directly given ones.
// Throws ConfigError if neither or both are present.
PotentialCoefficients resolve_coefficients(const Scenario& s);

// Mode volume (lambda/2)^3 for the cavity wavelength, um^3.
double half_wavelength_cubed(double omega_cav);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

}  // namespace rydcav::config
