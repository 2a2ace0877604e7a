#pragma once

// Canonical internal units: length um, time us, angular frequency rad/us,
// dipole moments in a0*e. Energies are angular frequencies (hbar = 1).

#include <numbers>
#include <string_view>

namespace rydcav::units {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// CODATA 2018, SI.
inline constexpr double bohr_radius_m = 5.29177210903e-11;
inline constexpr double elementary_charge_C = 1.602176634e-19;
inline constexpr double vacuum_permittivity_F_per_m = 8.8541878128e-12;
inline constexpr double hbar_J_s = 1.054571817e-34;
inline constexpr double speed_of_light_m_per_s = 299792458.0;

inline constexpr double atomic_dipole_C_m = bohr_radius_m * elementary_charge_C;

// (a0 e)^2 / (4 pi eps0 hbar) expressed in rad/us * um^3.
inline constexpr double dipole_dipole_scale =
    atomic_dipole_C_m * atomic_dipole_C_m /
    (4.0 * pi * vacuum_permittivity_F_per_m * hbar_J_s) * 1e18 * 1e-6;

// Ordinary frequency (Hz) <-> angular frequency (rad/us).
constexpr double angular_from_hz(double hz) { return two_pi * hz * 1e-6; }
constexpr double hz_from_angular(double rad_per_us) { return rad_per_us / (two_pi * 1e-6); }
constexpr double angular_from_mhz(double mhz) { return two_pi * mhz; }
constexpr double mhz_from_angular(double rad_per_us) { return rad_per_us / two_pi; }

constexpr double rad_per_us_from_rad_per_s(double w) { return w * 1e-6; }
constexpr double rad_per_s_from_rad_per_us(double w) { return w * 1e6; }

constexpr double um_from_m(double m) { return m * 1e6; }
constexpr double m_from_um(double um) { return um * 1e-6; }
constexpr double um3_from_m3(double m3) { return m3 * 1e18; }
constexpr double m3_from_um3(double um3) { return um3 * 1e-18; }
constexpr double us_from_s(double s) { return s * 1e6; }
constexpr double s_from_us(double us) { return us * 1e-6; }

constexpr double a0e_from_C_m(double d) { return d / atomic_dipole_C_m; }
constexpr double C_m_from_a0e(double d) { return d * atomic_dipole_C_m; }

// Vacuum wavelength (um) of a mode with angular frequency w (rad/us).
constexpr double wavelength_um(double w_rad_per_us) {
  return two_pi * speed_of_light_m_per_s / w_rad_per_us;
}

enum class Dimension { angular_frequency, length, volume, dipole, time, density, c3, c6 };

// Converts `value` tagged with `unit` into the internal unit of `dim`.
// Frequency tags (Hz..THz) are ordinary frequencies and pick up 2*pi;
// "rad/s" and "rad/us" are already angular. Throws ConfigError on unknown tags.
double to_internal(double value, std::string_view unit, Dimension dim, std::string_view field);

}  // namespace rydcav::units
