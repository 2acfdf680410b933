#pragma once

#include "fluxheat/device.hpp"
#include "fluxheat/rates.hpp"

namespace fluxheat {

// Steady-state populations and the net powers into each reservoir.
// powerTo2 is positive when reservoir 2 absorbs; powerTo1 = -powerTo2 in
// steady state (energy conservation).
struct SteadyState {
    Vec4 rho{};
    double powerTo2 = 0.0;  // W
    double powerTo1 = 0.0;  // W
};

// Populations from the summed rates. Uses the closed-form ratios when
// state 1 is fully disconnected (the symmetric-device case), otherwise the
// generic null-space solve. Throws DegenerateSystemError when no unique
// steady state exists.
Vec4 steady_state(const RateSet& rates);

// The two routes, exposed separately so they can be cross-checked.
Vec4 steady_state_closed_form(const Mat4& gammaTotal);
Vec4 steady_state_nullspace(const Mat4& gammaTotal);

// Net power into the given reservoir (1 or 2), W:
//   P = sum_{k != l} rho_k hbar omega_kl Gamma^{(r)}_{k -> l}
double transported_power(const Vec4& rho, const RateSet& rates,
                         int reservoir = 2);

// Populations plus both powers.
SteadyState solve_steady(const RateSet& rates);

// Occupation convention for the bare-resistor closed form. The printed
// closed form carries the Bose factor 1/(e^x - 1); the alternative
// 1/(1 - e^{-x}) (one quantum more) is kept for comparison.
enum class Occupation { bose, bosePlusOne };

// Closed-form central-peak power of a qubit inductively coupled to a bare
// resistor at T1 (galvanic case, M identified with L):
//   Q = Ip^2 R (w01 L)^2 / (R^2 + (w01 L)^2) * occ(hbar w01 / kB T1)
// with w01 = 2 pi f_q(fluxFrac).
double bare_resistor_power(const DeviceParams& p, double T1, double fluxFrac,
                           Occupation occ = Occupation::bose);

// Large-inductance saturation scale Ip^2 L w01 occ, quoted at the crossover
// inductance L = R/w01.
double bare_resistor_power_max(const DeviceParams& p, double T1,
                               double fluxFrac);

}  // namespace fluxheat
