#include "rydcav/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rydcav/errors.hpp"
#include "rydcav/units.hpp"

namespace rydcav::config {

namespace {

using json = nlohmann::json;
using units::Dimension;

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

const json& require(const json& obj, const std::string& key, const std::string& prefix) {
  if (!obj.is_object() || !obj.contains(key)) throw ConfigError(join(prefix, key), "missing field");
  return obj.at(key);
}

double quantity(const json& v, Dimension dim, const std::string& field) {
  if (v.is_number()) throw ConfigError(field, "numeric value needs a unit tag {\"value\", \"unit\"}");
  if (!v.is_object() || !v.contains("value") || !v.contains("unit"))
    throw ConfigError(field, "expected an object with \"value\" and \"unit\"");
  if (!v.at("value").is_number()) throw ConfigError(field, "\"value\" must be a number");
  if (!v.at("unit").is_string()) throw ConfigError(field, "\"unit\" must be a string");
  return units::to_internal(v.at("value").get<double>(), v.at("unit").get<std::string>(), dim, field);
}

double quantity_at(const json& obj, const std::string& key, Dimension dim, const std::string& prefix) {
  return quantity(require(obj, key, prefix), dim, join(prefix, key));
}

double plain_number(const json& obj, const std::string& key, const std::string& prefix, double fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(join(prefix, key), "expected a plain number");
  return v.get<double>();
}

std::string plain_string(const json& obj, const std::string& key, const std::string& prefix,
                         const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(join(prefix, key), "expected a string");
  return v.get<std::string>();
}

double angle_factor(const std::string& unit, const std::string& field) {
  if (unit == "rad") return 1.0;
  if (unit == "deg") return units::pi / 180.0;
  throw ConfigError(field, "unknown angle unit '" + unit + "'");
}

// Grid of values with a shared unit; `convert` maps a bare value to internal units.
template <class Convert>
std::vector<double> grid(const json& v, const std::string& field, Convert convert) {
  if (!v.is_object()) throw ConfigError(field, "expected a grid object");
  if (!v.contains("unit") || !v.at("unit").is_string())
    throw ConfigError(field, "grid needs a \"unit\" tag");
  const std::string unit = v.at("unit").get<std::string>();
  std::vector<double> raw;
  if (v.contains("values")) {
    if (!v.at("values").is_array()) throw ConfigError(join(field, "values"), "expected an array");
    for (const auto& x : v.at("values")) {
      if (!x.is_number()) throw ConfigError(join(field, "values"), "entries must be numbers");
      raw.push_back(x.get<double>());
    }
  } else {
    const double a = plain_number(v, "start", field, NAN);
    const double b = plain_number(v, "stop", field, NAN);
    const double n = plain_number(v, "count", field, NAN);
    if (!std::isfinite(a) || !std::isfinite(b) || !(n >= 1) || n != std::floor(n))
      throw ConfigError(field, "grid needs start, stop and integer count >= 1 (or values)");
    const std::string spacing = plain_string(v, "spacing", field, "linear");
    const int count = static_cast<int>(n);
    if (spacing == "log") {
      if (!(a > 0.0 && b > 0.0)) throw ConfigError(field, "log grid needs positive bounds");
      for (int i = 0; i < count; ++i)
        raw.push_back(count == 1 ? a : a * std::pow(b / a, static_cast<double>(i) / (count - 1)));
    } else if (spacing == "linear") {
      for (int i = 0; i < count; ++i)
        raw.push_back(count == 1 ? a : a + (b - a) * static_cast<double>(i) / (count - 1));
    } else {
      throw ConfigError(join(field, "spacing"), "expected \"linear\" or \"log\"");
    }
  }
  std::vector<double> out;
  out.reserve(raw.size());
  for (double x : raw) out.push_back(convert(x, unit));
  return out;
}

PhysicalParams physical_from(const json& obj, const std::string& prefix) {
  if (!obj.is_object()) throw ConfigError(prefix, "expected an object");
  PhysicalParams p;
  p.omega_d = quantity_at(obj, "omega_d", Dimension::angular_frequency, prefix);

  const bool has_cav = obj.contains("omega_cav"), has_delta = obj.contains("cavity_detuning");
  if (has_cav == has_delta)
    throw ConfigError(join(prefix, "omega_cav"), "give exactly one of omega_cav or cavity_detuning");
  p.omega_cav = has_cav ? quantity_at(obj, "omega_cav", Dimension::angular_frequency, prefix)
                        : p.omega_d - quantity_at(obj, "cavity_detuning", Dimension::angular_frequency, prefix);

  const bool has_p = obj.contains("omega_p"), has_forster = obj.contains("forster_detuning");
  if (has_p == has_forster)
    throw ConfigError(join(prefix, "omega_p"), "give exactly one of omega_p or forster_detuning");
  p.omega_p = has_p ? quantity_at(obj, "omega_p", Dimension::angular_frequency, prefix)
                    : 2.0 * p.omega_d -
                          quantity_at(obj, "forster_detuning", Dimension::angular_frequency, prefix);

  if (obj.contains("mu")) {
    if (obj.contains("mu_a") || obj.contains("mu_b"))
      throw ConfigError(join(prefix, "mu"), "give either mu or mu_a/mu_b");
    p.mu_a = p.mu_b = quantity_at(obj, "mu", Dimension::dipole, prefix);
  } else {
    p.mu_a = quantity_at(obj, "mu_a", Dimension::dipole, prefix);
    p.mu_b = quantity_at(obj, "mu_b", Dimension::dipole, prefix);
  }

  const auto& vol = require(obj, "mode_volume", prefix);
  if (vol.is_string()) {
    if (vol.get<std::string>() != "(lambda/2)^3")
      throw ConfigError(join(prefix, "mode_volume"), "only the string \"(lambda/2)^3\" is accepted");
    p.mode_volume = half_wavelength_cubed(p.omega_cav);
  } else {
    p.mode_volume = quantity(vol, Dimension::volume, join(prefix, "mode_volume"));
  }
  p.mode_amplitude = plain_number(obj, "mode_amplitude", prefix, 1.0);
  if (obj.contains("omega_g")) p.omega_g = quantity_at(obj, "omega_g", Dimension::angular_frequency, prefix);
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw ConfigError(prefix, e.what());
  }
  return p;
}

PotentialCoefficients coefficients_from(const json& obj, const std::string& prefix) {
  if (!obj.is_object()) throw ConfigError(prefix, "expected an object");
  const double C0 = quantity_at(obj, "C0", Dimension::angular_frequency, prefix);
  const double C3 = quantity_at(obj, "C3", Dimension::c3, prefix);
  const double C6 = quantity_at(obj, "C6", Dimension::c6, prefix);
  return PotentialCoefficients::direct(C0, C3, C6);
}

std::vector<double> time_grid(const json& v, const std::string& field) {
  return grid(v, field, [&](double x, const std::string& unit) {
    return units::to_internal(x, unit, Dimension::time, field);
  });
}

ramsey::RamseyConfig ramsey_from(const json& obj, const std::string& prefix) {
  if (!obj.is_object()) throw ConfigError(prefix, "expected an object");
  ramsey::RamseyConfig c;
  const bool has_pg = obj.contains("p_g"), has_pd = obj.contains("p_d");
  if (!has_pg && !has_pd) throw ConfigError(join(prefix, "p_d"), "missing field");
  if (has_pd) c.p_d = plain_number(obj, "p_d", prefix, 0.0);
  c.p_g = has_pg ? plain_number(obj, "p_g", prefix, 0.0) : 1.0 - c.p_d;
  if (!has_pd) c.p_d = 1.0 - c.p_g;

  const double N = plain_number(obj, "N", prefix, NAN);
  if (!(N == std::floor(N)) || N > 1e8) throw ConfigError(join(prefix, "N"), "expected an integer atom number");
  c.N = static_cast<int>(N);
  c.density = quantity_at(obj, "density", Dimension::density, prefix);
  if (obj.contains("blockade_radius"))
    c.blockade_radius = quantity_at(obj, "blockade_radius", Dimension::length, prefix);
  c.tau_grid = time_grid(require(obj, "tau", prefix), join(prefix, "tau"));

  const double M = plain_number(obj, "realizations", prefix, 20.0);
  if (M != std::floor(M) || M > 1e7) throw ConfigError(join(prefix, "realizations"), "expected an integer");
  c.realizations = static_cast<int>(M);

  if (obj.contains("seed")) {
    const auto& s = obj.at("seed");
    if (!s.is_number_unsigned()) throw ConfigError(join(prefix, "seed"), "expected a non-negative integer");
    c.seed = s.get<std::uint64_t>();
  }
  try {
    c.mode = ramsey::interaction_mode_from_string(plain_string(obj, "mode", prefix, "full"));
    c.geometry = ramsey::geometry_from_string(plain_string(obj, "geometry", prefix, "ensemble"));
  } catch (const ConfigError& e) {
    throw ConfigError(join(prefix, e.field()), e.what());
  }
  const double threads = plain_number(obj, "threads", prefix, 0.0);
  if (threads != std::floor(threads) || threads < 0 || threads > 4096)
    throw ConfigError(join(prefix, "threads"), "expected a non-negative integer");
  c.threads = static_cast<int>(threads);
  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(join(prefix, e.field()), e.what());
  }
  return c;
}

Table1Row table_row_from(const json& obj, const std::string& prefix) {
  Table1Row row;
  row.name = plain_string(obj, "name", prefix, "");
  row.params = physical_from(require(obj, "physical", prefix), join(prefix, "physical"));
  const std::string ref = join(prefix, "reference");
  const auto& r = require(obj, "reference", prefix);
  row.reference.g = quantity_at(r, "g", Dimension::angular_frequency, ref);
  row.reference.C0 = quantity_at(r, "C0", Dimension::angular_frequency, ref);
  row.reference.C3 = quantity_at(r, "C3", Dimension::c3, ref);
  row.reference.C6 = quantity_at(r, "C6", Dimension::c6, ref);
  return row;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", std::string("invalid JSON: ") + e.what());
  }
}

const json& section(const json& doc, const std::string& key) {
  return doc.is_object() && doc.contains(key) ? doc.at(key) : doc;
}

}  // namespace

double half_wavelength_cubed(double omega_cav) {
  if (!(omega_cav > 0.0)) throw DomainError("half_wavelength_cubed: cavity frequency must be positive");
  const double half = 0.5 * units::wavelength_um(omega_cav);
  return half * half * half;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Scenario parse_scenario(const std::string& json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw ConfigError("<document>", "top level must be an object");
  Scenario s;
  s.name = plain_string(doc, "name", "", "scenario");
  s.task = plain_string(doc, "task", "", "");

  if (doc.contains("physical")) s.physical = physical_from(doc.at("physical"), "physical");
  if (doc.contains("coefficients")) s.coefficients = coefficients_from(doc.at("coefficients"), "coefficients");
  if (s.physical && s.coefficients)
    throw ConfigError("coefficients", "give either physical or coefficients, not both");
  if (doc.contains("ramsey")) s.ramsey = ramsey_from(doc.at("ramsey"), "ramsey");
  if (doc.contains("r_grid"))
    s.r_grid = grid(doc.at("r_grid"), "r_grid", [](double x, const std::string& unit) {
      return units::to_internal(x, unit, Dimension::length, "r_grid");
    });
  if (doc.contains("theta_grid"))
    s.theta_grid = grid(doc.at("theta_grid"), "theta_grid", [](double x, const std::string& unit) {
      return x * angle_factor(unit, "theta_grid");
    });
  s.perturbative_threshold = plain_number(doc, "perturbative_threshold", "", 10.0);
  if (doc.contains("table1")) {
    const auto& rows = doc.at("table1");
    if (!rows.is_array()) throw ConfigError("table1", "expected an array of rows");
    for (std::size_t i = 0; i < rows.size(); ++i)
      s.table1.push_back(table_row_from(rows[i], "table1[" + std::to_string(i) + "]"));
  }
  if (doc.contains("output")) {
    const auto& o = doc.at("output");
    s.output_dir = plain_string(o, "dir", "output", "");
    s.output_stem = plain_string(o, "stem", "output", "");
    s.format = plain_string(o, "format", "output", "csv");
    if (s.format != "csv" && s.format != "json")
      throw ConfigError("output.format", "expected \"csv\" or \"json\"");
  }
  if (s.output_stem.empty()) s.output_stem = s.name;

  // Key order is normalized by the object map; whitespace by dump().
  s.canonical = doc.dump();
  s.hash = hex64(fnv1a64(s.canonical));
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

PhysicalParams parse_physical(const std::string& json_text) {
  const json doc = parse_json(json_text);
  const bool nested = doc.is_object() && doc.contains("physical");
  return physical_from(section(doc, "physical"), nested ? "physical" : "");
}

ramsey::RamseyConfig parse_ramsey(const std::string& json_text) {
  const json doc = parse_json(json_text);
  const bool nested = doc.is_object() && doc.contains("ramsey");
  return ramsey_from(section(doc, "ramsey"), nested ? "ramsey" : "");
}

PotentialCoefficients resolve_coefficients(const Scenario& s) {
  if (s.coefficients) return *s.coefficients;
  if (s.physical) return coefficients(*s.physical);
  throw ConfigError("physical", "scenario needs physical parameters or coefficients");
}

}  // namespace rydcav::config
