#include "fluxheat/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>

#include "fluxheat/constants.hpp"
#include "fluxheat/errors.hpp"
#include "fluxheat/qubit.hpp"
#include "fluxheat/thermal.hpp"

namespace fluxheat {

namespace {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SweepRecord evaluate_record(const DeviceParams& p, const SweepConfig& cfg,
                            double flux) {
    SweepRecord rec;
    rec.fluxFrac = flux;
    rec.fq = qubit_frequency(p, flux);

    const auto photonic = [&](double T2) {
        const EigenSystem eig = eigensystem_for(p, flux);
        const Mat4 elems = matrix_elements(eig, p);
        const RateSet rates = transition_rates(elems, eig,
                                               reservoir_channel(p, 1, cfg.T1),
                                               reservoir_channel(p, 2, T2));
        const Vec4 rho = steady_state(rates);
        rec.rho = rho;
        return transported_power(rho, rates, 2);
    };

    if (cfg.mode == SweepMode::fixedT2) {
        rec.T2 = cfg.T2;
        rec.power = photonic(cfg.T2) + cfg.backgroundPower;
        return rec;
    }

    // self-consistent T2: damped fixed point on the electron-phonon balance
    double T2 = cfg.T0;
    bool converged = false;
    double residual = 0.0;
    for (int it = 0; it < 100; ++it) {
        const double power = photonic(T2) + cfg.backgroundPower;
        const double next = invert_ep_power(p.sigmaV2, p.nExp, power, cfg.T0);
        residual = next - T2;
        if (std::fabs(residual) < 1e-6) {
            converged = true;
            break;
        }
        T2 += 0.5 * residual;
    }
    if (!converged)
        throw ConvergenceError(
            "self-consistent T2 did not converge at flux " + format_full(flux) +
            " (residual " + format_full(residual) + " K)",
            std::fabs(residual));
    // record the exact balance pair: power at the converged T2, and the T2
    // that the electron-phonon law assigns to that power
    rec.power = photonic(T2) + cfg.backgroundPower;
    rec.T2 = invert_ep_power(p.sigmaV2, p.nExp, rec.power, cfg.T0);
    return rec;
}

}  // namespace

void SweepConfig::validate() const {
    if (!(fluxStart <= fluxStop))
        throw ParamError("sweep config: fluxStart must be <= fluxStop");
    if (points < 2 && fluxStart != fluxStop)
        throw ParamError("sweep config: points must be >= 2");
    if (!(T1 > 0) || !(T0 > 0) || !(T2 > 0))
        throw ParamError("sweep config: temperatures must be > 0");
}

double point_power(const DeviceParams& p, double fluxFrac, double T1,
                   double T2) {
    const EigenSystem eig = eigensystem_for(p, fluxFrac);
    const Mat4 elems = matrix_elements(eig, p);
    const RateSet rates = transition_rates(elems, eig,
                                           reservoir_channel(p, 1, T1),
                                           reservoir_channel(p, 2, T2));
    return transported_power(steady_state(rates), rates, 2);
}

SweepResult run_sweep(const DeviceParams& p, const SweepConfig& cfg,
                      int threads) {
    p.validate();
    cfg.validate();

    SweepResult result;
    result.params = p;
    result.config = cfg;

    if (cfg.fluxStart == cfg.fluxStop) {  // zero-width range: single record
        result.records.push_back(evaluate_record(p, cfg, cfg.fluxStart));
        return result;
    }
    result.records.resize(cfg.points);

    const double step = (cfg.fluxStop - cfg.fluxStart) / (cfg.points - 1);
    const auto fluxAt = [&](int i) { return cfg.fluxStart + i * step; };

    if (threads <= 1) {
        for (int i = 0; i < cfg.points; ++i)
            result.records[i] = evaluate_record(p, cfg, fluxAt(i));
    } else {
        const int nChunks = std::min(threads, cfg.points);
        std::vector<std::future<void>> futures;
        futures.reserve(nChunks);
        for (int c = 0; c < nChunks; ++c) {
            futures.push_back(std::async(std::launch::async, [&, c] {
                for (int i = c; i < cfg.points; i += nChunks)
                    result.records[i] = evaluate_record(p, cfg, fluxAt(i));
            }));
        }
        for (auto& f : futures) f.get();  // rethrows worker exceptions
    }

    result.peaks = find_peaks(result);
    return result;
}

std::vector<Peak> find_peaks(const SweepResult& result,
                             double prominenceFraction) {
    std::vector<Peak> peaks;
    const auto& rec = result.records;
    const int n = static_cast<int>(rec.size());
    if (n < 5) return peaks;

    const double step = rec[1].fluxFrac - rec[0].fluxFrac;

    // topographic prominence: height above the higher of the two valley
    // minima separating the peak from larger terrain
    const auto prominence_of = [&](int i) {
        double leftMin = rec[i].power, rightMin = rec[i].power;
        for (int j = i - 1; j >= 0; --j) {
            if (rec[j].power > rec[i].power) break;
            leftMin = std::min(leftMin, rec[j].power);
        }
        for (int j = i + 1; j < n; ++j) {
            if (rec[j].power > rec[i].power) break;
            rightMin = std::min(rightMin, rec[j].power);
        }
        return rec[i].power - std::max(leftMin, rightMin);
    };

    std::vector<Peak> candidates;
    for (int i = 1; i + 1 < n; ++i) {
        if (!(rec[i].power > rec[i - 1].power && rec[i].power > rec[i + 1].power))
            continue;
        Peak peak;
        // quadratic refinement through the three points around the maximum
        const double pm = rec[i - 1].power, p0 = rec[i].power, pp = rec[i + 1].power;
        const double denom = pm - 2.0 * p0 + pp;
        double offset = denom != 0.0 ? 0.5 * (pm - pp) / denom : 0.0;
        offset = std::clamp(offset, -0.5, 0.5);
        peak.fluxFrac = rec[i].fluxFrac + offset * step;
        peak.power = p0 - 0.25 * (pm - pp) * offset;
        peak.prominence = prominence_of(i);
        candidates.push_back(peak);
    }
    if (candidates.empty()) return peaks;

    // classify, then keep peaks above the prominence threshold relative to
    // the central peak (falling back to the most prominent one)
    const DeviceParams& p = result.params;
    const double frMean = 0.5 * (p.fr1 + p.fr2);
    for (Peak& peak : candidates) {
        if (std::fabs(peak.fluxFrac - 0.5) <= 0.75 * step) {
            peak.kind = Peak::Kind::central;
            continue;
        }
        const double fq = qubit_frequency(p, peak.fluxFrac);
        const int harmonic = std::max(1, static_cast<int>(std::lround(fq / frMean)));
        if (std::fabs(fq - harmonic * frMean) < 0.5 * frMean) {
            peak.kind = harmonic == 1 ? Peak::Kind::innerSatellite
                                      : Peak::Kind::outerSatellite;
            peak.harmonic = harmonic;
        } else {
            peak.kind = Peak::Kind::other;
        }
    }

    double refProminence = 0.0;
    bool haveCentral = false;
    for (const Peak& peak : candidates) {
        if (peak.kind == Peak::Kind::central) {
            refProminence = std::max(refProminence, peak.prominence);
            haveCentral = true;
        }
    }
    if (!haveCentral)
        for (const Peak& peak : candidates)
            refProminence = std::max(refProminence, peak.prominence);

    const double threshold = prominenceFraction * refProminence;
    for (const Peak& peak : candidates)
        if (peak.kind == Peak::Kind::central || peak.prominence >= threshold)
            peaks.push_back(peak);
    return peaks;
}

std::vector<std::pair<double, double>> switching_curve(
    const DeviceParams& p, const std::vector<double>& T1List, double T0,
    double backgroundPower) {
    if (T1List.empty())
        throw ParamError("switching_curve: empty T1 list");
    std::vector<std::pair<double, double>> out;
    out.reserve(T1List.size());
    for (const double T1 : T1List) {
        const double pOn = point_power(p, 0.5, T1, T0) + backgroundPower;
        const double pOff = point_power(p, 0.0, T1, T0) + backgroundPower;
        out.emplace_back(T1, switching_ratio(pOn, pOff));
    }
    return out;
}

std::string sweep_csv(const SweepResult& result, const std::string& header) {
    std::ostringstream out;
    out << header;
    out << "flux_frac,f_q_hz,rho0,rho1,rho2,rho3,power_w,t2_k\n";
    for (const SweepRecord& r : result.records) {
        out << format_full(r.fluxFrac) << ',' << format_full(r.fq) << ','
            << format_full(r.rho[0]) << ',' << format_full(r.rho[1]) << ','
            << format_full(r.rho[2]) << ',' << format_full(r.rho[3]) << ','
            << format_full(r.power) << ',' << format_full(r.T2) << '\n';
    }
    return out.str();
}

std::string peak_summary(const SweepResult& result, const std::string& header) {
    static const char* kindNames[] = {"central", "inner_satellite",
                                      "outer_satellite", "other"};
    std::ostringstream out;
    out << header;
    out << "peaks " << result.peaks.size() << "\n";
    for (const Peak& peak : result.peaks) {
        out << "peak kind=" << kindNames[static_cast<int>(peak.kind)];
        if (peak.kind == Peak::Kind::innerSatellite ||
            peak.kind == Peak::Kind::outerSatellite)
            out << " harmonic=" << peak.harmonic;
        out << " flux_frac=" << format_full(peak.fluxFrac)
            << " power_w=" << format_full(peak.power)
            << " prominence_w=" << format_full(peak.prominence) << "\n";
    }
    return out.str();
}

}  // namespace fluxheat
