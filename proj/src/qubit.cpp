#include "fluxheat/qubit.hpp"

#include <cmath>

#include "fluxheat/constants.hpp"

namespace fluxheat {

double reduce_flux(double fluxFrac) {
    double phi = fluxFrac - std::floor(fluxFrac);
    if (phi >= 1.0) phi = 0.0;  // guards fluxFrac just below an integer
    return phi;
}

double qubit_frequency(const DeviceParams& p, double fluxFrac) {
    p.validate();
    const double phi = reduce_flux(fluxFrac);
    const double eps = 2.0 * p.Ip * phys::phi0 * (phi - 0.5) / phys::h;
    return std::sqrt(p.fq0 * p.fq0 + eps * eps);
}

}  // namespace fluxheat
