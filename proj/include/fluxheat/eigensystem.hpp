#pragma once

#include "fluxheat/device.hpp"
#include "fluxheat/linalg.hpp"

namespace fluxheat {

// Eigen-decomposition of the single-excitation Hamiltonian in the basis
// {|g00>, |e00>, |g10>, |g01>}. Index order follows the closed-form
// construction, not energy: 0 = ground (E = 0 exactly), 1 = antisymmetric
// resonator state (E = h*fr for a symmetric device), 2/3 = lower/upper
// hybridized states. coeffs[k][i] is the coefficient of basis state |i> in
// eigenstate |psi_k>.
struct EigenSystem {
    Vec4 energies{};  // J
    Mat4 coeffs{};
    double fluxFrac = 0.0;
};

// 4x4 Hamiltonian matrix in J:
//   h * [[0, 0, 0, 0], [0, fq, -g1, -g2], [0, -g1, fr1, gamma12],
//        [0, -g2, gamma12, fr2]]
Mat4 build_hamiltonian(const DeviceParams& p, double fluxFrac);

// Closed-form eigensystem for a symmetric device. Throws
// UnsupportedConfigError when fr1 != fr2, g1 != g2 or gamma12 != 0
// (use eigensystem_numeric for those).
EigenSystem eigensystem_closed_form(const DeviceParams& p, double fluxFrac);

// Jacobi diagonalization of an explicitly built Hamiltonian. When
// `reference` is given, eigenpairs are matched to its ordering by maximal
// overlap; otherwise the ground state comes first and the rest are sorted
// ascending. Eigenvector phases: first nonzero coefficient positive.
EigenSystem eigensystem_numeric(const Mat4& hamiltonian, double fluxFrac,
                                const EigenSystem* reference = nullptr);

// Closed form when the device is symmetric, numeric otherwise.
EigenSystem eigensystem_for(const DeviceParams& p, double fluxFrac);

}  // namespace fluxheat
