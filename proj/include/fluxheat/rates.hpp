#pragma once

#include "fluxheat/device.hpp"
#include "fluxheat/eigensystem.hpp"
#include "fluxheat/noise.hpp"

namespace fluxheat {

// Golden-rule transition rates per reservoir. gammaR1/gammaR2[i][j] is the
// rate i -> j in 1/s (diagonal zero); omega[i][j] = (E_i - E_j)/hbar. With
// the noise sampled at omega[i][j], emission (downward) picks up the
// spontaneous+stimulated branch and absorption the Boltzmann-suppressed one,
// which enforces per-reservoir detailed balance.
struct RateSet {
    Mat4 gammaR1{};
    Mat4 gammaR2{};
    Mat4 omega{};

    Mat4 total() const;
};

// Magnitudes of the flux-derivative matrix elements |<psi_i|dH/dPhi|psi_j>|
// in A. The flux derivative, in the single-excitation basis, is
//   alpha |1><1| + beta (|0><1| + |1><0|)
//     - kappa_1 (|0><2| + |2><0|) - kappa_2 (|0><3| + |3><0|)
// with alpha = 2 Ip sqrt(1 - (fq0/fq)^2), beta = (fq0/fq) Ip and
// kappa_i = (h g_i / Phi0)(Ip / (e fq0))(fq0/fq)^2. For g1 = g2 the
// antisymmetric state 1 decouples entirely (dark state).
Mat4 matrix_elements(const EigenSystem& eig, const DeviceParams& p);

RateSet transition_rates(const Mat4& elems, const EigenSystem& eig,
                         const NoiseChannel& reservoir1,
                         const NoiseChannel& reservoir2);

}  // namespace fluxheat
