#pragma once

#include <string>

namespace fluxheat {

// Circuit constants of one device. All values SI. Defaults are the model
// parameter set used for the main flux sweeps (preset "device1").
struct DeviceParams {
    double R = 6.0;            // reservoir resistance, ohm
    double L = 0.8e-9;         // coupling inductance, H
    double M = 0.8e-9;         // input-coil mutual inductance, H (M <= L)
    double Ip = 30e-9;         // persistent current, A
    double fq0 = 2.0e9;        // qubit minimum frequency, Hz
    double fr1 = 7.0e9;        // resonator 1 fundamental, Hz
    double fr2 = 7.0e9;        // resonator 2 fundamental, Hz
    double g1 = 0.2e9;         // qubit-resonator 1 coupling, Hz
    double g2 = 0.2e9;         // qubit-resonator 2 coupling, Hz
    double gamma12 = 0.0;      // resonator-resonator coupling, Hz
    double Zinf = 50.0;        // transmission-line impedance, ohm
    double sigmaV1 = 9.35e-10;   // electron-phonon constant, reservoir 1, W K^-n
    double sigmaV2 = 11.44e-10;  // electron-phonon constant, reservoir 2, W K^-n
    int nExp = 5;              // electron-phonon exponent

    // True when both resonator branches are identical and the closed-form
    // eigensystem applies (fr1 == fr2, g1 == g2, gamma12 == 0).
    bool symmetric() const {
        return fr1 == fr2 && g1 == g2 && gamma12 == 0.0;
    }

    // Throws ParamError on any violated invariant.
    void validate() const;
};

// Built-in presets: "device1" is the model parameter set, "device2" the
// spectroscopy-device estimate (Ip = 21 nA, fq0 = 3.9 GHz, fr = 6.4 GHz).
DeviceParams device_preset(const std::string& name);

// Flat key = value config format. Keys are exactly the DeviceParams field
// names; missing keys keep the preset defaults, unknown keys and malformed
// values are hard errors (ParamError).
DeviceParams parse_device_config(const std::string& text);
DeviceParams load_device_config(const std::string& path);
std::string serialize_device_config(const DeviceParams& p);

}  // namespace fluxheat
