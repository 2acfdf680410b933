#include "fluxheat/eigensystem.hpp"

#include <cmath>

#include "fluxheat/constants.hpp"
#include "fluxheat/errors.hpp"
#include "fluxheat/qubit.hpp"

namespace fluxheat {

namespace {

// First coefficient above 1e-12 of the vector's max magnitude made positive.
void fix_phase(Vec4& v) {
    double maxAbs = 0.0;
    for (double x : v) maxAbs = std::max(maxAbs, std::fabs(x));
    for (double x : v) {
        if (std::fabs(x) > 1e-12 * maxAbs) {
            if (x < 0.0)
                for (double& y : v) y = -y;
            return;
        }
    }
}

double overlap(const Vec4& a, const Vec4& b) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

Mat4 build_hamiltonian(const DeviceParams& p, double fluxFrac) {
    const double fq = qubit_frequency(p, fluxFrac);
    Mat4 hm{};
    hm[1][1] = phys::h * fq;
    hm[2][2] = phys::h * p.fr1;
    hm[3][3] = phys::h * p.fr2;
    hm[1][2] = hm[2][1] = -phys::h * p.g1;
    hm[1][3] = hm[3][1] = -phys::h * p.g2;
    hm[2][3] = hm[3][2] = phys::h * p.gamma12;
    return hm;
}

EigenSystem eigensystem_closed_form(const DeviceParams& p, double fluxFrac) {
    if (!p.symmetric())
        throw UnsupportedConfigError(
            "closed-form eigensystem needs fr1 == fr2, g1 == g2 and "
            "gamma12 == 0; use eigensystem_numeric");
    const double fq = qubit_frequency(p, fluxFrac);
    const double fr = p.fr1;
    const double g = p.g1;

    EigenSystem eig;
    eig.fluxFrac = fluxFrac;
    eig.coeffs[0] = {1.0, 0.0, 0.0, 0.0};
    const double invSqrt2 = 1.0 / std::sqrt(2.0);
    eig.coeffs[1] = {0.0, 0.0, -invSqrt2, invSqrt2};

    if (g == 0.0) {
        // decoupled limit: a qubit state and the symmetric resonator state
        const Vec4 qubitState{0.0, 1.0, 0.0, 0.0};
        const Vec4 symState{0.0, 0.0, invSqrt2, invSqrt2};
        eig.energies = {0.0, phys::h * fr, phys::h * std::min(fq, fr),
                        phys::h * std::max(fq, fr)};
        eig.coeffs[2] = fq <= fr ? qubitState : symState;
        eig.coeffs[3] = fq <= fr ? symState : qubitState;
        return eig;
    }

    const double sD = std::sqrt((fq - fr) * (fq - fr) + 8.0 * g * g);
    eig.energies = {0.0, phys::h * fr, 0.5 * phys::h * (fq + fr - sD),
                    0.5 * phys::h * (fq + fr + sD)};

    // u = -fq + fr + sD and v = -fq + fr - sD, each computed in the form
    // that avoids cancellation on its side of the crossing
    double u, v;
    if (fq >= fr) {
        u = 8.0 * g * g / (sD + (fq - fr));
        v = -(fq - fr) - sD;
    } else {
        u = (fr - fq) + sD;
        v = -8.0 * g * g / (sD + (fr - fq));
    }
    const double nu = std::sqrt(8.0 * g * g + u * u);
    const double nv = std::sqrt(8.0 * g * g + v * v);
    eig.coeffs[2] = {0.0, u / nu, 2.0 * g / nu, 2.0 * g / nu};
    eig.coeffs[3] = {0.0, v / nv, 2.0 * g / nv, 2.0 * g / nv};
    return eig;
}

EigenSystem eigensystem_numeric(const Mat4& hamiltonian, double fluxFrac,
                                const EigenSystem* reference) {
    const EigenDecomposition dec = jacobi_eigen(hamiltonian);

    EigenSystem eig;
    eig.fluxFrac = fluxFrac;

    int order[4];
    if (reference) {
        bool used[4] = {false, false, false, false};
        for (int k = 0; k < 4; ++k) {
            int best = -1;
            double bestOv = -1.0;
            for (int j = 0; j < 4; ++j) {
                if (used[j]) continue;
                const double ov = std::fabs(overlap(reference->coeffs[k], dec.vectors[j]));
                if (ov > bestOv) {
                    bestOv = ov;
                    best = j;
                }
            }
            used[best] = true;
            order[k] = best;
        }
    } else {
        // ground state (the pure |g00> eigenvector at E = 0) first, rest
        // ascending; jacobi_eigen already sorted ascending
        int ground = 0;
        double bestG = -1.0;
        for (int j = 0; j < 4; ++j) {
            if (std::fabs(dec.vectors[j][0]) > bestG) {
                bestG = std::fabs(dec.vectors[j][0]);
                ground = j;
            }
        }
        int pos = 1;
        order[0] = ground;
        for (int j = 0; j < 4; ++j)
            if (j != ground) order[pos++] = j;
    }

    for (int k = 0; k < 4; ++k) {
        eig.energies[k] = dec.values[order[k]];
        eig.coeffs[k] = dec.vectors[order[k]];
        fix_phase(eig.coeffs[k]);
    }
    return eig;
}

EigenSystem eigensystem_for(const DeviceParams& p, double fluxFrac) {
    if (p.symmetric()) return eigensystem_closed_form(p, fluxFrac);
    return eigensystem_numeric(build_hamiltonian(p, fluxFrac), fluxFrac);
}

}  // namespace fluxheat
