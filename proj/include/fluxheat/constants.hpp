#pragma once

// SI defining constants (2019 revision, exact) plus derived ones used
// throughout the model.

namespace fluxheat::phys {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double h = 6.62607015e-34;        // Planck constant, J s
inline constexpr double e = 1.602176634e-19;       // elementary charge, C
inline constexpr double kB = 1.380649e-23;         // Boltzmann constant, J/K

inline constexpr double hbar = h / (2.0 * pi);     // J s
inline constexpr double phi0 = h / (2.0 * e);      // flux quantum h/2e, Wb

}  // namespace fluxheat::phys
