#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fluxheat/device.hpp"
#include "fluxheat/eigensystem.hpp"
#include "fluxheat/rates.hpp"
#include "fluxheat/steady.hpp"

namespace fluxheat {

enum class SweepMode { fixedT2, selfConsistentT2 };

struct SweepConfig {
    double fluxStart = 0.3;
    double fluxStop = 0.7;
    int points = 2001;
    double T1 = 0.3;              // K, reservoir 1
    double T0 = 0.08;             // K, phonon bath
    double T2 = 0.08;             // K, reservoir 2 (fixedT2 mode)
    SweepMode mode = SweepMode::fixedT2;
    double backgroundPower = 0.0; // W, flux-independent additive offset

    void validate() const;
};

struct SweepRecord {
    double fluxFrac = 0.0;
    double fq = 0.0;       // Hz
    Vec4 rho{};
    double power = 0.0;    // W, into reservoir 2 (includes backgroundPower)
    double T2 = 0.0;       // K
};

struct Peak {
    enum class Kind { central, innerSatellite, outerSatellite, other };
    Kind kind = Kind::other;
    double fluxFrac = 0.0;   // sub-grid refined position
    double power = 0.0;      // refined height, W
    double prominence = 0.0; // W
    int harmonic = 0;        // n of the nearest f_q = n*fr crossing (satellites)
};

struct SweepResult {
    DeviceParams params;
    SweepConfig config;
    std::vector<SweepRecord> records;
    std::vector<Peak> peaks;
};

// One full pipeline evaluation: eigensystem -> matrix elements -> rates ->
// steady state -> power into reservoir 2 (photonic only, no background).
double point_power(const DeviceParams& p, double fluxFrac, double T1,
                   double T2);

// Full flux sweep. In selfConsistentT2 mode each point iterates a damped
// (0.5) fixed point on T2 against the electron-phonon balance until the
// update falls below 1 uK (ConvergenceError after 100 iterations); the
// recorded T2 is re-derived from the recorded power so the pair satisfies
// the balance to machine precision. `threads` > 1 evaluates points
// concurrently; records are assembled in grid order and byte-identical to a
// serial run.
SweepResult run_sweep(const DeviceParams& p, const SweepConfig& cfg,
                      int threads = 1);

// Local maxima by three-point comparison with quadratic sub-grid refinement,
// kept above `prominenceFraction` of the central peak's prominence and
// classified: central (at 1/2 within half a grid step), inner satellite
// (f_q = fr crossing), outer satellite (f_q = n*fr, n >= 2).
std::vector<Peak> find_peaks(const SweepResult& result,
                             double prominenceFraction = 0.05);

// Switching ratio (flux 1/2 vs flux 0, T2 held at T0) for each T1;
// backgroundPower is added to both powers.
std::vector<std::pair<double, double>> switching_curve(
    const DeviceParams& p, const std::vector<double>& T1List, double T0,
    double backgroundPower = 0.0);

// CSV with header flux_frac,f_q_hz,rho0,rho1,rho2,rho3,power_w,t2_k in
// full round-trip precision. `header` lines (already '#'-prefixed) are
// emitted first. Output is byte-stable for identical inputs.
std::string sweep_csv(const SweepResult& result, const std::string& header = {});

// Structured text summary of peak annotations.
std::string peak_summary(const SweepResult& result, const std::string& header = {});

}  // namespace fluxheat
