// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code = number of failed
// criteria. Pass the CLI binary path as argv[1] to exercise the real
// executable in the determinism criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fluxheat/calibration.hpp"
#include "fluxheat/constants.hpp"
#include "fluxheat/device.hpp"
#include "fluxheat/eigensystem.hpp"
#include "fluxheat/noise.hpp"
#include "fluxheat/qubit.hpp"
#include "fluxheat/rates.hpp"
#include "fluxheat/steady.hpp"
#include "fluxheat/sweep.hpp"
#include "fluxheat/thermal.hpp"

using namespace fluxheat;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
    std::printf("%s  criterion %s: %s\n", ok ? "PASS" : "FAIL", id,
                detail.c_str());
    if (!ok) ++failures;
}

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Lcg {
    unsigned long long state = 123456789ull;
    double next() {
        state = 6364136223846793005ull * state + 1442695040888963407ull;
        return static_cast<double>(state >> 11) / 9007199254740992.0;
    }
    double in(double lo, double hi) { return lo + (hi - lo) * next(); }
};

bool rel_close(double a, double b, double tol) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return std::fabs(a - b) <= tol * std::max(scale, 1e-300);
}

double crossing_flux(const DeviceParams& p, int harmonic) {
    double lo = 0.5, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (qubit_frequency(p, mid) < harmonic * p.fr1 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

// ---- criteria ----

void criterion1_central_peak_magnitude() {
    const DeviceParams p;  // R = 6 ohm, L = M = 0.8 nH, Ip = 30 nA, fq0 = 2 GHz
    const auto t0 = Clock::now();
    const double q = bare_resistor_power(p, 0.3, 0.5);
    const double dt = seconds_since(t0);
    const bool inBand = q >= 7.5e-15 / 1.5 && q <= 7.5e-15 * 1.5;
    const bool fast = dt < 1e-3;
    report("1 (closed-form anchor)", inBand && fast,
           "bare-resistor power " + num(q) + " W vs 7.5 fW (ratio " +
               num(q / 7.5e-15) + ", tolerance factor 1.5), runtime " +
               num(dt * 1e3) + " ms");
}

void criterion2_triplet() {
    const DeviceParams p;
    SweepConfig cfg;
    cfg.fluxStart = 0.3;
    cfg.fluxStop = 0.7;
    cfg.points = 2001;
    cfg.T1 = 0.3;
    cfg.T0 = cfg.T2 = 0.08;

    const auto t0 = Clock::now();
    const SweepResult res = run_sweep(p, cfg, 1);
    const double dt = seconds_since(t0);
    const double step = (cfg.fluxStop - cfg.fluxStart) / (cfg.points - 1);

    int centrals = 0, inner = 0;
    double centralFlux = 0.0;
    std::vector<double> innerFlux;
    for (const Peak& peak : res.peaks) {
        if (peak.kind == Peak::Kind::central) {
            ++centrals;
            centralFlux = peak.fluxFrac;
        } else if (peak.kind == Peak::Kind::innerSatellite) {
            ++inner;
            innerFlux.push_back(peak.fluxFrac);
        }
    }

    const double root = crossing_flux(p, 1);
    double worstDist = 0.0;
    for (const double f : innerFlux)
        worstDist = std::max(worstDist,
                             std::fabs(std::fabs(f - 0.5) - (root - 0.5)));

    const bool centralOk = centrals == 1 && std::fabs(centralFlux - 0.5) <= 0.5 * step;
    const bool countOk = inner == 2;
    const bool distOk = worstDist <= step;
    const bool fast = dt < 10.0;
    report("2 (triplet reproduction)", centralOk && countOk && distOk && fast,
           std::to_string(centrals) + " central at " + num(centralFlux) + ", " +
               std::to_string(inner) + " satellites, worst |peak-root| " +
               num(worstDist) + " = " + num(worstDist / step) +
               " grid steps (tolerance 1; root " + num(root) + "), runtime " +
               num(dt) + " s");
}

void criterion3_magnitude() {
    const DeviceParams p;
    const double q = point_power(p, 0.5, 0.3, 0.08);
    report("3 (order of magnitude)", q >= 2e-15 && q <= 50e-15,
           "full-model central-peak power " + num(q) + " W, band [2e-15, 5e-14]");
}

void criterion4_switching() {
    const DeviceParams p;
    const auto low = switching_curve(p, {0.07, 0.08, 0.09, 0.1}, 0.08, 0.0);
    double worst = 1.0;
    for (const auto& [T1, ratio] : low) worst = std::min(worst, ratio);

    const double pOn = point_power(p, 0.5, 0.1, 0.08);
    const auto swamped = switching_curve(p, {0.1}, 0.08, 10.0 * pOn);
    report("4 (switching ratio)", worst >= 0.95 && swamped[0].second <= 0.15,
           "min ratio " + num(worst) + " at T1 <= 100 mK (needs >= 0.95); with "
           "10x background " + num(swamped[0].second) + " (needs <= 0.15)");
}

void criterion5_cooling() {
    const DeviceParams p;
    const double q = point_power(p, 0.5, 0.07, 0.08);
    report("5 (cooling sign)", q < 0.0,
           "P(T1 = 70 mK, T2 = T0 = 80 mK) = " + num(q) + " W");
}

void criterion6_property_suites() {
    const auto t0 = Clock::now();
    const DeviceParams base;
    std::string firstFail;

    // detailed balance, 1e3 random (params, flux, T) tuples at 1e-8
    {
        Lcg rng;
        double worst = 0.0;
        for (int it = 0; it < 1000; ++it) {
            DeviceParams p = base;
            p.Ip = rng.in(10e-9, 50e-9);
            p.fq0 = rng.in(1e9, 5e9);
            p.g1 = p.g2 = rng.in(0.05e9, 0.5e9);
            const double T1 = rng.in(0.05, 0.5), T2 = rng.in(0.05, 0.5);
            const EigenSystem eig = eigensystem_for(p, rng.next());
            const RateSet rs = transition_rates(matrix_elements(eig, p), eig,
                                                reservoir_channel(p, 1, T1),
                                                reservoir_channel(p, 2, T2));
            for (int r = 1; r <= 2; ++r) {
                const Mat4& g = r == 1 ? rs.gammaR1 : rs.gammaR2;
                const double T = r == 1 ? T1 : T2;
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) {
                        if (i == j || g[i][j] <= 0.0 || g[j][i] <= 0.0) continue;
                        const double boltz = std::exp(phys::hbar * rs.omega[i][j] /
                                                      (phys::kB * T));
                        if (!std::isfinite(boltz) || boltz == 0.0) continue;
                        worst = std::max(
                            worst, std::fabs(g[i][j] / g[j][i] - boltz) / boltz);
                    }
            }
        }
        if (worst > 1e-8 && firstFail.empty())
            firstFail = "detailed balance " + num(worst);
    }

    // steady-state normalization and dark state
    {
        Lcg rng;
        for (int it = 0; it < 200; ++it) {
            const double flux = rng.next();
            const EigenSystem eig = eigensystem_for(base, flux);
            const RateSet rs = transition_rates(matrix_elements(eig, base), eig,
                                                reservoir_channel(base, 1, 0.3),
                                                reservoir_channel(base, 2, 0.08));
            const Vec4 rho = steady_state(rs);
            double sum = 0.0;
            for (const double r : rho) sum += r;
            if ((std::fabs(sum - 1.0) > 1e-12 || rho[1] != 0.0) &&
                firstFail.empty())
                firstFail = "steady-state normalization/dark state at flux " +
                            num(flux);
        }
    }

    // closed form vs numeric eigensystem, 1e4 flux points at 1e-10
    {
        Lcg rng;
        const double scale = phys::h * (base.fq0 + base.fr1);
        for (int it = 0; it < 10000; ++it) {
            const double flux = rng.next();
            const EigenSystem cf = eigensystem_closed_form(base, flux);
            const EigenSystem nm =
                eigensystem_numeric(build_hamiltonian(base, flux), flux, &cf);
            for (int k = 0; k < 4; ++k) {
                const double denom =
                    std::max(std::fabs(cf.energies[k]), 1e-3 * scale);
                if (std::fabs(cf.energies[k] - nm.energies[k]) / denom > 1e-10 &&
                    firstFail.empty())
                    firstFail = "eigen agreement at flux " + num(flux);
                double ov = 0.0;
                for (int i = 0; i < 4; ++i) ov += cf.coeffs[k][i] * nm.coeffs[k][i];
                if (std::fabs(ov) < 1.0 - 1e-8 && firstFail.empty())
                    firstFail = "eigen overlap at flux " + num(flux);
            }
        }
    }

    // equilibrium null power
    {
        const double peak = point_power(base, 0.5, 0.3, 0.08);
        const double eq = point_power(base, 0.5, 0.08, 0.08);
        if (std::fabs(eq) >= 1e-3 * std::fabs(peak) && firstFail.empty())
            firstFail = "equilibrium null power " + num(eq);
    }

    // flux-mirror symmetry of a sweep at 1e-9
    {
        SweepConfig cfg;
        cfg.fluxStart = 0.3;
        cfg.fluxStop = 0.7;
        cfg.points = 401;
        cfg.T1 = 0.3;
        cfg.T0 = cfg.T2 = 0.08;
        const SweepResult res = run_sweep(base, cfg, 1);
        const std::size_t n = res.records.size();
        for (std::size_t i = 0; i < n; ++i)
            if (!rel_close(res.records[i].power, res.records[n - 1 - i].power,
                           1e-9) &&
                firstFail.empty())
                firstFail = "sweep mirror symmetry at index " + std::to_string(i);
    }

    // electron-phonon round trip at 1e-12, physical grids
    {
        Lcg rng;
        for (int it = 0; it < 1000; ++it) {
            const double T0 = rng.in(0.05, 0.3);
            const double Te = T0 * rng.in(0.9, 4.0);
            const double P = ep_power(base.sigmaV2, base.nExp, Te, T0);
            if (!rel_close(invert_ep_power(base.sigmaV2, base.nExp, P, T0), Te,
                           1e-12) &&
                firstFail.empty())
                firstFail = "electron-phonon round trip at Te " + num(Te);
        }
    }

    // calibration round trip: 1% coefficients, 2 mK under 1% voltage noise
    {
        const double aT = 0.6878471508410534, bT = 0.13821178771026335,
                     cT = 4.0e-4;
        const double pT[4] = {0.29507575757575893, 2173.484848484823,
                              -16851851.851851705, 26094276094.275837};
        std::vector<CalibrationPoint> pts;
        for (int i = 0; i < 6; ++i) {
            const double v = 3.6e-4 - i * (3.6e-4 - 3.06e-4) / 5.0;
            pts.emplace_back(v, aT + bT * std::log10(cT - v));
        }
        for (int i = 0; i < 14; ++i) {
            const double v = 3.0e-4 - i * (3.0e-4 - 1.0e-4) / 13.0;
            pts.emplace_back(v, ((pT[3] * v + pT[2]) * v + pT[1]) * v + pT[0]);
        }
        const CalibrationCurve curve = fit_calibration(pts);
        double worst = std::fabs(curve.a - aT) / std::fabs(aT);
        worst = std::max(worst, std::fabs(curve.b - bT) / std::fabs(bT));
        worst = std::max(worst, std::fabs(curve.c - cT) / std::fabs(cT));
        for (int k = 0; k < 4; ++k)
            worst = std::max(worst,
                             std::fabs(curve.poly[k] - pT[k]) / std::fabs(pT[k]));
        if (worst > 0.01 && firstFail.empty())
            firstFail = "calibration coefficients " + num(worst);

        Lcg rng;
        auto noisy = pts;
        for (auto& [v, t] : noisy) v *= 1.0 + 0.01 * (2.0 * rng.next() - 1.0);
        const CalibrationCurve nc = fit_calibration(noisy);
        double ss = 0.0;
        const int n = 101;
        for (int i = 0; i < n; ++i) {
            const double v = 1.05e-4 + i * (3.55e-4 - 1.05e-4) / (n - 1);
            const double truth =
                v > 3.0e-4 ? aT + bT * std::log10(cT - v)
                           : ((pT[3] * v + pT[2]) * v + pT[1]) * v + pT[0];
            const double err = voltage_to_temperature(nc, v) - truth;
            ss += err * err;
        }
        if (std::sqrt(ss / n) > 2e-3 && firstFail.empty())
            firstFail = "noisy calibration rms " + num(std::sqrt(ss / n));
    }

    const double dt = seconds_since(t0);
    const bool ok = firstFail.empty() && dt < 60.0;
    report("6 (property suites)", ok,
           (firstFail.empty() ? std::string("all property suites passed")
                              : "first failure: " + firstFail) +
               ", runtime " + num(dt) + " s (limit 60)");
}

void criterion7_determinism(const char* cliPath) {
    if (cliPath) {
        const std::string out = "/tmp/fluxheat_acceptance_sweep.csv";
        const std::string cmd = std::string(cliPath) +
                                " sweep --t1 0.3 --t0 0.08 --points 2001 --out " +
                                out + " >/dev/null 2>/dev/null";
        if (std::system(cmd.c_str()) != 0) {
            report("7 (determinism)", false, "CLI sweep run failed");
            return;
        }
        const std::string first = read_file(out);
        if (std::system(cmd.c_str()) != 0) {
            report("7 (determinism)", false, "second CLI sweep run failed");
            return;
        }
        const std::string second = read_file(out);
        report("7 (determinism)", !first.empty() && first == second,
               "two consecutive CLI sweep runs: " +
                   std::to_string(first.size()) + " bytes, byte-identical = " +
                   (first == second ? "yes" : "no"));
        std::remove(out.c_str());
        std::remove((out + ".peaks.txt").c_str());
        return;
    }
    const DeviceParams p;
    SweepConfig cfg;
    cfg.points = 501;
    const std::string a = sweep_csv(run_sweep(p, cfg, 1));
    const std::string b = sweep_csv(run_sweep(p, cfg, 1));
    report("7 (determinism)", a == b,
           "in-process fallback (no CLI path given), byte-identical = " +
               std::string(a == b ? "yes" : "no"));
}

}  // namespace

int main(int argc, char** argv) {
    const char* cliPath = argc > 1 ? argv[1] : nullptr;
    const auto t0 = Clock::now();

    criterion1_central_peak_magnitude();
    criterion2_triplet();
    criterion3_magnitude();
    criterion4_switching();
    criterion5_cooling();
    criterion6_property_suites();
    criterion7_determinism(cliPath);

    std::printf("acceptance suite finished in %.2f s: %d criteria failed\n",
                seconds_since(t0), failures);
    return failures;
}
