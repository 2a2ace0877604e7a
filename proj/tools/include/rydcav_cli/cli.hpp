#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rydcav/config.hpp"

namespace rydcav::cli {

enum ExitCode : int { ok = 0, io_error = 1, config_error = 2, numerical_error = 3 };

// Environment variable naming the default output directory of `run`.
inline constexpr const char* out_dir_env = "RYDCAV_OUT_DIR";

struct Table1Values {
  double g = 0.0, C0 = 0.0, C3 = 0.0, C6 = 0.0;  // MHz, MHz, MHz um^3, MHz um^6
};

struct Table1Entry {
  std::string name;
  Table1Values computed;
  Table1Values reference;
  // computed / reference; empty when the row has no coupling (ratio undefined).
  std::optional<Table1Values> ratio;
  double detuning_to_coupling = 0.0;  // |delta| / max(g_a, g_b)
  std::optional<bool> pass;           // all ratios in [0.1, 10]
};

std::vector<Table1Entry> table1_crosscheck(const std::vector<config::Table1Row>& rows);

// Full command line entry point; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

// Runs a scenario file and writes its outputs plus a manifest into `out_dir`
// (empty: scenario's output.dir, then $RYDCAV_OUT_DIR, then the working directory).
int run_scenario(const std::filesystem::path& path, const std::filesystem::path& out_dir,
                 std::ostream& log);

}  // namespace rydcav::cli
