#include "fluxheat/noise.hpp"

#include <cmath>

#include "fluxheat/constants.hpp"
#include "fluxheat/errors.hpp"

namespace fluxheat {

NoiseChannel NoiseChannel::resonator(double temperature, double R, double M,
                                     double fr, double Zinf) {
    NoiseChannel ch;
    ch.temperature = temperature;
    ch.R = R;
    ch.M = M;
    ch.filter = Filter::resonator;
    ch.fr = fr;
    ch.Zinf = Zinf;
    ch.validate();
    return ch;
}

NoiseChannel NoiseChannel::inductive(double temperature, double R, double M,
                                     double L) {
    NoiseChannel ch;
    ch.temperature = temperature;
    ch.R = R;
    ch.M = M;
    ch.filter = Filter::inductive;
    ch.L = L;
    ch.validate();
    return ch;
}

void NoiseChannel::validate() const {
    if (!(temperature > 0)) throw ParamError("noise channel: temperature must be > 0");
    if (!(R > 0)) throw ParamError("noise channel: R must be > 0");
    if (!(M > 0)) throw ParamError("noise channel: M must be > 0");
    if (filter == Filter::resonator) {
        if (!(fr > 0)) throw ParamError("noise channel: fr must be > 0");
        if (!(Zinf > 0)) throw ParamError("noise channel: Zinf must be > 0");
    } else {
        if (!(L >= 0)) throw ParamError("noise channel: L must be >= 0");
    }
}

NoiseChannel reservoir_channel(const DeviceParams& p, int reservoir,
                               double temperature) {
    if (reservoir != 1 && reservoir != 2)
        throw ParamError("reservoir index must be 1 or 2");
    const double fr = reservoir == 1 ? p.fr1 : p.fr2;
    return NoiseChannel::resonator(temperature, p.R, p.M, fr, p.Zinf);
}

double bare_current_noise(double R, double T, double omega) {
    if (omega == 0.0) return 2.0 * phys::kB * T / R;
    const double x = phys::hbar * omega / (phys::kB * T);
    // 1 - e^{-x} written via expm1 so the omega -> 0 limit stays accurate
    return 2.0 * phys::hbar * omega / (R * (-std::expm1(-x)));
}

double resonator_transmission(double f, double fr, double R, double Zinf) {
    const double arg = phys::pi * f / fr;
    const double c = std::cos(arg);
    const double s = std::sin(arg);
    const double zr = Zinf / R;
    return 1.0 / (c * c + zr * zr * s * s);
}

double flux_noise(const NoiseChannel& ch, double omega) {
    const double m2 = ch.M * ch.M;
    if (ch.filter == NoiseChannel::Filter::resonator) {
        const double f = std::fabs(omega) / (2.0 * phys::pi);
        const double t2 = resonator_transmission(f, ch.fr, ch.R, ch.Zinf);
        return m2 * t2 * bare_current_noise(ch.R, ch.temperature, omega);
    }
    const double lorentz =
        ch.R / (ch.R * ch.R + omega * omega * ch.L * ch.L);
    if (omega == 0.0) return 2.0 * m2 * lorentz * phys::kB * ch.temperature;
    const double x = phys::hbar * omega / (phys::kB * ch.temperature);
    return 2.0 * m2 * lorentz * phys::hbar * omega / (-std::expm1(-x));
}

}  // namespace fluxheat
