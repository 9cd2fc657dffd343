#ifndef KDTLI_CONSTANTS_HPP
#define KDTLI_CONSTANTS_HPP

namespace kdtli {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// SI defining constants and CODATA 2018 values
inline constexpr double planck = 6.62607015e-34;               // J s
inline constexpr double planck_reduced = planck / two_pi;      // J s
inline constexpr double speed_of_light = 299792458.0;          // m/s
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m

// unit conversions
inline constexpr double cubic_angstrom = 1e-30;    // m^3
inline constexpr double square_centimeter = 1e-4;  // m^2
inline constexpr double nanometer = 1e-9;          // m
inline constexpr double micrometer = 1e-6;         // m
inline constexpr double millimeter = 1e-3;         // m

}  // namespace kdtli

#endif
