#include "fluxheat/rates.hpp"

#include <cmath>

#include "fluxheat/constants.hpp"
#include "fluxheat/qubit.hpp"

namespace fluxheat {

Mat4 RateSet::total() const {
    Mat4 t{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = gammaR1[i][j] + gammaR2[i][j];
    return t;
}

Mat4 matrix_elements(const EigenSystem& eig, const DeviceParams& p) {
    const double fq = qubit_frequency(p, eig.fluxFrac);
    const double ratio = p.fq0 / fq;  // <= 1 by construction
    const double alpha =
        2.0 * p.Ip * std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
    const double beta = ratio * p.Ip;
    const double kappaBase =
        (phys::h / phys::phi0) * (p.Ip / (phys::e * p.fq0)) * ratio * ratio;
    const double kappa1 = kappaBase * p.g1;
    const double kappa2 = kappaBase * p.g2;

    Mat4 m{};
    const Mat4& a = eig.coeffs;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const double elem = alpha * a[i][1] * a[j][1] +
                                beta * (a[i][0] * a[j][1] + a[i][1] * a[j][0]) -
                                kappa1 * (a[i][0] * a[j][2] + a[i][2] * a[j][0]) -
                                kappa2 * (a[i][0] * a[j][3] + a[i][3] * a[j][0]);
            m[i][j] = m[j][i] = std::fabs(elem);
        }
    }
    return m;
}

RateSet transition_rates(const Mat4& elems, const EigenSystem& eig,
                         const NoiseChannel& reservoir1,
                         const NoiseChannel& reservoir2) {
    RateSet rs;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            const double w = (eig.energies[i] - eig.energies[j]) / phys::hbar;
            rs.omega[i][j] = w;
            if (elems[i][j] == 0.0) continue;
            const double m2h2 = elems[i][j] * elems[i][j] / (phys::hbar * phys::hbar);
            rs.gammaR1[i][j] = m2h2 * flux_noise(reservoir1, w);
            rs.gammaR2[i][j] = m2h2 * flux_noise(reservoir2, w);
        }
    }
    return rs;
}

}  // namespace fluxheat
