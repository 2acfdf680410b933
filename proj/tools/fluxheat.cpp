// Command-line front end: spectrum, sweep, peak, calibrate, validate.

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fluxheat/calibration.hpp"
#include "fluxheat/constants.hpp"
#include "fluxheat/device.hpp"
#include "fluxheat/eigensystem.hpp"
#include "fluxheat/errors.hpp"
#include "fluxheat/manifest.hpp"
#include "fluxheat/qubit.hpp"
#include "fluxheat/steady.hpp"
#include "fluxheat/sweep.hpp"
#include "fluxheat/thermal.hpp"
#include "fluxheat/validate.hpp"

namespace {

using namespace fluxheat;

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string now_iso8601() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot open output file '" + path + "'");
    f << content;
    if (!f) throw DataError("failed writing output file '" + path + "'");
}

struct CommonOptions {
    std::string configPath;
    std::string preset = "device1";
};

DeviceParams resolve_params(const CommonOptions& common) {
    if (!common.configPath.empty()) return load_device_config(common.configPath);
    return device_preset(common.preset);
}

RunManifest make_manifest(const std::string& subcommand,
                          const CommonOptions& common, const DeviceParams& p,
                          std::vector<std::string> outputs) {
    RunManifest m;
    m.subcommand = subcommand;
    m.configPath = common.configPath;
    m.params = p;
    m.outputPaths = std::move(outputs);
    m.timestamp = now_iso8601();
    return m;
}

int cmd_spectrum(const CommonOptions& common, double fluxStart, double fluxStop,
                 int points, const std::string& outPath) {
    const DeviceParams p = resolve_params(common);
    p.validate();
    if (!(fluxStart < fluxStop) || points < 2)
        throw ParamError("spectrum: need flux-start < flux-stop and points >= 2");

    const RunManifest manifest = make_manifest("spectrum", common, p, {outPath});
    std::ostringstream csv;
    csv << manifest_header(manifest);
    csv << "flux_frac,f_q_hz,e0_hz,e1_hz,e2_hz,e3_hz\n";
    const double step = (fluxStop - fluxStart) / (points - 1);
    for (int i = 0; i < points; ++i) {
        const double flux = fluxStart + i * step;
        const EigenSystem eig = eigensystem_for(p, flux);
        csv << format_full(flux) << ',' << format_full(qubit_frequency(p, flux));
        for (int k = 0; k < 4; ++k)
            csv << ',' << format_full(eig.energies[k] / phys::h);
        csv << '\n';
    }
    write_file(outPath, csv.str());
    std::cout << "wrote spectrum (" << points << " points) to " << outPath
              << " at " << manifest.timestamp << "\n";
    return 0;
}

int cmd_sweep(const CommonOptions& common, const SweepConfig& cfg,
              const std::string& outPath, int threads, double prominence) {
    const DeviceParams p = resolve_params(common);
    const std::string peaksPath = outPath + ".peaks.txt";
    const RunManifest manifest =
        make_manifest("sweep", common, p, {outPath, peaksPath});

    SweepResult result = run_sweep(p, cfg, threads);
    if (prominence != 0.05) result.peaks = find_peaks(result, prominence);
    const std::string header = manifest_header(manifest);
    write_file(outPath, sweep_csv(result, header));
    write_file(peaksPath, peak_summary(result, header));

    std::cout << "swept " << result.records.size() << " flux points at "
              << manifest.timestamp << "\n"
              << peak_summary(result);
    return 0;
}

int cmd_peak(const CommonOptions& common, double T1, double T0) {
    const DeviceParams p = resolve_params(common);
    p.validate();

    const double pOn = point_power(p, 0.5, T1, T0);
    const double pOff = point_power(p, 0.0, T1, T0);
    const double closed = bare_resistor_power(p, T1, 0.5);
    const double closedAlt =
        bare_resistor_power(p, T1, 0.5, Occupation::bosePlusOne);

    std::cout << "central-peak power (full model, flux = 1/2):  "
              << format_full(pOn) << " W\n";
    std::cout << "bare-resistor closed form:                    "
              << format_full(closed) << " W\n";
    std::cout << "bare-resistor closed form (n+1 occupation):   "
              << format_full(closedAlt) << " W\n";
    std::cout << "ratio full / closed form:                     "
              << format_full(pOn / closed) << "\n";
    std::cout << "off-state power (flux = 0):                   "
              << format_full(pOff) << " W\n";
    std::cout << "switching ratio (P_on - P_off)/P_on:          "
              << format_full(switching_ratio(pOn, pOff)) << "\n";
    return 0;
}

int cmd_calibrate(const std::string& dataPath, const std::string& outPath,
                  double breakTemp, const std::vector<double>& voltages) {
    const auto points = load_calibration_points(dataPath);
    const CalibrationCurve curve = fit_calibration(points, breakTemp);

    std::cout << "fitted " << points.size() << " calibration points\n";
    std::cout << "low range  T = a + b log10(c - V): a = " << format_full(curve.a)
              << ", b = " << format_full(curve.b) << ", c = " << format_full(curve.c)
              << " (rms " << format_full(curve.lowRms) << " K)\n";
    std::cout << "high range cubic: p0 = " << format_full(curve.poly[0])
              << ", p1 = " << format_full(curve.poly[1])
              << ", p2 = " << format_full(curve.poly[2])
              << ", p3 = " << format_full(curve.poly[3]) << " (rms "
              << format_full(curve.highRms) << " K)\n";
    std::cout << "break voltage: " << format_full(curve.breakVoltage) << " V at "
              << format_full(curve.breakTemp) << " K\n";

    if (!outPath.empty()) {
        write_file(outPath, serialize_calibration_curve(curve));
        std::cout << "wrote curve to " << outPath << "\n";
    }
    for (const double v : voltages)
        std::cout << "T(" << format_full(v)
                  << " V) = " << format_full(voltage_to_temperature(curve, v))
                  << " K\n";
    return 0;
}

int cmd_validate(const CommonOptions& common) {
    const DeviceParams p = resolve_params(common);
    const auto results = run_validation(p);
    std::cout << format_validation_report(results);
    if (!all_passed(results)) {
        std::cout << "validation FAILED\n";
        return 4;
    }
    std::cout << "all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"photonic heat transport through a flux-qubit--resonator "
                 "network between two thermal reservoirs"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--config", common.configPath,
                   "device config file (flat key = value)");
    app.add_option("--preset", common.preset, "built-in preset when no config")
        ->check(CLI::IsMember({"device1", "device2"}));

    double fluxStart = 0.3, fluxStop = 0.7;
    int points = 2001;
    std::string outPath;
    double t1 = 0.3, t2 = 0.08, t0 = 0.08;
    std::string mode = "fixed";
    double backgroundPower = 0.0;
    int threads = 1;
    double prominence = 0.05;

    auto* spectrum = app.add_subcommand(
        "spectrum", "qubit dispersion and eigenenergies vs flux");
    spectrum->add_option("--flux-start", fluxStart, "first flux point, Phi/Phi0");
    spectrum->add_option("--flux-stop", fluxStop, "last flux point, Phi/Phi0");
    spectrum->add_option("--points", points, "grid points");
    spectrum->add_option("--out", outPath, "output CSV path")->required();

    auto* sweep = app.add_subcommand(
        "sweep", "transported power across a flux sweep");
    sweep->add_option("--flux-start", fluxStart, "first flux point, Phi/Phi0");
    sweep->add_option("--flux-stop", fluxStop, "last flux point, Phi/Phi0");
    sweep->add_option("--points", points, "grid points");
    sweep->add_option("--t1", t1, "reservoir 1 temperature, K");
    sweep->add_option("--t2", t2, "reservoir 2 temperature, K (fixed mode)");
    sweep->add_option("--t0", t0, "phonon bath temperature, K");
    sweep->add_option("--mode", mode, "fixed | selfconsistent")
        ->check(CLI::IsMember({"fixed", "selfconsistent"}));
    sweep->add_option("--background-power", backgroundPower,
                      "flux-independent power offset, W");
    sweep->add_option("--threads", threads, "worker threads");
    sweep->add_option("--prominence", prominence,
                      "peak threshold as a fraction of the central prominence");
    sweep->add_option("--out", outPath, "output CSV path")->required();

    auto* peak = app.add_subcommand(
        "peak", "central-peak power, closed-form anchor and switching ratio");
    peak->add_option("--t1", t1, "reservoir 1 temperature, K");
    peak->add_option("--t0", t0, "phonon bath (= reservoir 2) temperature, K");

    std::string dataPath, curveOut;
    double breakTemp = 0.135;
    std::vector<double> voltages;
    auto* calibrate = app.add_subcommand(
        "calibrate", "fit a thermometer calibration and convert voltages");
    calibrate->add_option("--data", dataPath, "two-column points file")->required();
    calibrate->add_option("--out", curveOut, "write fitted curve here");
    calibrate->add_option("--break-temp", breakTemp, "range boundary, K");
    calibrate->add_option("--voltage", voltages,
                          "thermal voltage(s) to convert, V");

    auto* validate = app.add_subcommand("validate", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (spectrum->parsed())
            return cmd_spectrum(common, fluxStart, fluxStop, points, outPath);
        if (sweep->parsed()) {
            SweepConfig cfg;
            cfg.fluxStart = fluxStart;
            cfg.fluxStop = fluxStop;
            cfg.points = points;
            cfg.T1 = t1;
            cfg.T2 = t2;
            cfg.T0 = t0;
            cfg.mode = mode == "selfconsistent" ? SweepMode::selfConsistentT2
                                                : SweepMode::fixedT2;
            cfg.backgroundPower = backgroundPower;
            return cmd_sweep(common, cfg, outPath, threads, prominence);
        }
        if (peak->parsed()) return cmd_peak(common, t1, t0);
        if (calibrate->parsed())
            return cmd_calibrate(dataPath, curveOut, breakTemp, voltages);
        if (validate->parsed()) return cmd_validate(common);
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const ParamError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const fluxheat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
