#pragma once

#include <string>
#include <vector>

#include "fluxheat/device.hpp"

namespace fluxheat {

struct CheckResult {
    enum class Status { pass, fail, skipped };
    std::string name;
    Status status = Status::pass;
    std::string detail;
};

// Test-only hook: lets a fixture corrupt one internal comparison so the
// failure path of the validation suite can be exercised.
struct ValidationFault {
    double closedFormEnergyScale = 1.0;
};

// Runs the invariant suite against a parameter set: constant identities,
// closed-form vs numeric eigensystem, detailed balance, dark-state
// decoupling, steady-state dual route, equilibrium null power, flux mirror
// symmetry, electron-phonon round trip, calibration round trip. Checks that
// do not apply to the configuration are reported as skipped.
std::vector<CheckResult> run_validation(const DeviceParams& p,
                                        const ValidationFault* fault = nullptr);

bool all_passed(const std::vector<CheckResult>& results);
std::string format_validation_report(const std::vector<CheckResult>& results);

}  // namespace fluxheat
