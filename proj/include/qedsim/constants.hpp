#pragma once

namespace qedsim::constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// CODATA 2018 SI values. c, e, h (hence hbar to the printed precision) and
// k_B are exact by definition since the 2019 SI redefinition.
inline constexpr double c_light = 299792458.0;               // m/s
inline constexpr double elementary_charge = 1.602176634e-19; // C
inline constexpr double hbar = 1.054571817e-34;              // J s
inline constexpr double electron_mass = 9.1093837015e-31;    // kg
inline constexpr double eps0 = 8.8541878128e-12;             // F/m
inline constexpr double mu0 = 1.25663706212e-6;              // N/A^2
inline constexpr double boltzmann = 1.380649e-23;            // J/K

}  // namespace qedsim::constants
