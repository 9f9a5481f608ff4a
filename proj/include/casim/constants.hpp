#pragma once

namespace casim::constants {

inline constexpr double pi = 3.14159265358979323846;
// CODATA 2018
inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double c_light = 2.99792458e8;     // m/s

}  // namespace casim::constants
