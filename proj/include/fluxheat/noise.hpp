#pragma once

#include "fluxheat/device.hpp"

namespace fluxheat {

// One reservoir's noise channel as seen by the qubit: a resistor R at
// `temperature`, coupled through either a half-wave resonator (transmission
// filter) or a plain inductive loop, with mutual inductance M to the qubit.
struct NoiseChannel {
    enum class Filter { resonator, inductive };

    double temperature = 0.0;  // K
    double R = 0.0;            // ohm
    double M = 0.0;            // H
    Filter filter = Filter::resonator;
    double fr = 0.0;           // Hz, resonator filter
    double Zinf = 0.0;         // ohm, resonator filter
    double L = 0.0;            // H, inductive filter

    static NoiseChannel resonator(double temperature, double R, double M,
                                  double fr, double Zinf);
    static NoiseChannel inductive(double temperature, double R, double M,
                                  double L);
    void validate() const;
};

// Channel for reservoir 1 or 2 of a device (resonator filter at fr1/fr2).
NoiseChannel reservoir_channel(const DeviceParams& p, int reservoir,
                               double temperature);

// Quantum Johnson-Nyquist current noise of a resistor, A^2 s:
//   S_I(omega) = 2 hbar omega / (R (1 - e^{-hbar omega / kB T}))
// valid for omega of either sign; the omega -> 0 limit is 2 kB T / R.
double bare_current_noise(double R, double T, double omega);

// Power transmission through an R-terminated half-wave resonator:
//   |t|^2 = 1 / (cos^2(pi f/fr) + (Zinf/R)^2 sin^2(pi f/fr))
// periodic in f with period fr, equal to 1 at every passband f = n*fr.
double resonator_transmission(double f, double fr, double R, double Zinf);

// Flux noise spectral density on the qubit, Wb^2 s. The resonator filter is
// evaluated at |omega|/2pi; the quantum asymmetry lives in the current noise.
double flux_noise(const NoiseChannel& ch, double omega);

}  // namespace fluxheat
