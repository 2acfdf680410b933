#pragma once

namespace fluxheat {

// Electron-phonon power sigmaV * (Te^n - T0^n), W. Positive when the
// electrons are hotter than the phonon bath.
double ep_power(double sigmaV, int n, double Te, double T0);

// Electron temperature from an absorbed power: Te = (P/sigmaV + T0^n)^(1/n).
// Throws ParamError when P < -sigmaV*T0^n (Te would be imaginary).
double invert_ep_power(double sigmaV, int n, double P, double T0);

// Joule power of an NIS heater junction, I^2 R / 2.
double heater_power(double current, double Rheater);

// On/off switching ratio (Pon - Poff)/Pon. Throws ParamError at Pon == 0.
double switching_ratio(double pOn, double pOff);

}  // namespace fluxheat
