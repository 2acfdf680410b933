#pragma once

#include "fluxheat/device.hpp"

namespace fluxheat {

// Flux-dependent qubit transition frequency, Hz:
//   f_q = sqrt(fq0^2 + (2 Ip Phi0 (phi - 1/2) / h)^2)
// with phi = fluxFrac reduced mod 1. Periodic with period 1, even about
// fluxFrac = 1/2, minimum fq0 at half flux.
double qubit_frequency(const DeviceParams& p, double fluxFrac);

// fluxFrac reduced to [0, 1).
double reduce_flux(double fluxFrac);

}  // namespace fluxheat
