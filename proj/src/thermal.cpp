#include "fluxheat/thermal.hpp"

#include <cmath>

#include "fluxheat/errors.hpp"

namespace fluxheat {

double ep_power(double sigmaV, int n, double Te, double T0) {
    if (!(sigmaV > 0)) throw ParamError("ep_power: sigmaV must be > 0");
    if (!(Te > 0) || !(T0 > 0)) throw ParamError("ep_power: temperatures must be > 0");
    if (n < 3) throw ParamError("ep_power: n must be >= 3");
    return sigmaV * (std::pow(Te, n) - std::pow(T0, n));
}

double invert_ep_power(double sigmaV, int n, double P, double T0) {
    if (!(sigmaV > 0)) throw ParamError("invert_ep_power: sigmaV must be > 0");
    if (!(T0 > 0)) throw ParamError("invert_ep_power: T0 must be > 0");
    if (n < 3) throw ParamError("invert_ep_power: n must be >= 3");
    const double arg = P / sigmaV + std::pow(T0, n);
    if (arg < 0.0)
        throw ParamError("invert_ep_power: power below the physical floor "
                         "-sigmaV*T0^n");
    return std::pow(arg, 1.0 / n);
}

double heater_power(double current, double Rheater) {
    if (!(Rheater > 0)) throw ParamError("heater_power: Rheater must be > 0");
    return 0.5 * current * current * Rheater;
}

double switching_ratio(double pOn, double pOff) {
    if (pOn == 0.0)
        throw ParamError("switching_ratio: undefined for P_on == 0");
    return (pOn - pOff) / pOn;
}

}  // namespace fluxheat
