#include "rydcav/units.hpp"

#include <string>

#include "rydcav/errors.hpp"

namespace rydcav::units {
namespace {

struct Tag {
  std::string_view name;
  double factor;
};

// Ordinary-frequency tags get the 2 pi here, once.
constexpr Tag frequency_tags[] = {
    {"Hz", two_pi * 1e-6}, {"kHz", two_pi * 1e-3}, {"MHz", two_pi},
    {"GHz", two_pi * 1e3}, {"THz", two_pi * 1e6},  {"rad/s", 1e-6},
    {"rad/us", 1.0},       {"rad/ns", 1e3},
};
constexpr Tag length_tags[] = {{"um", 1.0}, {"nm", 1e-3}, {"mm", 1e3}, {"m", 1e6}, {"a0", bohr_radius_m * 1e6}};
constexpr Tag volume_tags[] = {{"um3", 1.0}, {"m3", 1e18}, {"mm3", 1e9}, {"cm3", 1e12}};
constexpr Tag dipole_tags[] = {{"a0e", 1.0}, {"C*m", 1.0 / atomic_dipole_C_m}, {"Cm", 1.0 / atomic_dipole_C_m}};
constexpr Tag time_tags[] = {{"us", 1.0}, {"ns", 1e-3}, {"ps", 1e-6}, {"ms", 1e3}, {"s", 1e6}};
constexpr Tag density_tags[] = {{"um^-3", 1.0}, {"cm^-3", 1e-12}, {"m^-3", 1e-18}};
constexpr Tag c3_tags[] = {{"rad/us*um3", 1.0}, {"MHz*um3", two_pi}, {"GHz*um3", two_pi * 1e3}, {"kHz*um3", two_pi * 1e-3}};
constexpr Tag c6_tags[] = {{"rad/us*um6", 1.0}, {"MHz*um6", two_pi}, {"GHz*um6", two_pi * 1e3}, {"kHz*um6", two_pi * 1e-3}};

template <std::size_t N>
bool lookup(const Tag (&tags)[N], std::string_view unit, double& factor) {
  for (const auto& t : tags) {
    if (t.name == unit) {
      factor = t.factor;
      return true;
    }
  }
  return false;
}

}  // namespace

double to_internal(double value, std::string_view unit, Dimension dim, std::string_view field) {
  double factor = 0.0;
  bool ok = false;
  switch (dim) {
    case Dimension::angular_frequency: ok = lookup(frequency_tags, unit, factor); break;
    case Dimension::length: ok = lookup(length_tags, unit, factor); break;
    case Dimension::volume: ok = lookup(volume_tags, unit, factor); break;
    case Dimension::dipole: ok = lookup(dipole_tags, unit, factor); break;
    case Dimension::time: ok = lookup(time_tags, unit, factor); break;
    case Dimension::density: ok = lookup(density_tags, unit, factor); break;
    case Dimension::c3: ok = lookup(c3_tags, unit, factor); break;
    case Dimension::c6: ok = lookup(c6_tags, unit, factor); break;
  }
  if (!ok) throw ConfigError(std::string(field), "unknown unit tag '" + std::string(unit) + "'");
  return value * factor;
}

}  // namespace rydcav::units
