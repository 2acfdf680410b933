#include "fluxheat/validate.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "fluxheat/calibration.hpp"
#include "fluxheat/constants.hpp"
#include "fluxheat/eigensystem.hpp"
#include "fluxheat/errors.hpp"
#include "fluxheat/noise.hpp"
#include "fluxheat/qubit.hpp"
#include "fluxheat/rates.hpp"
#include "fluxheat/steady.hpp"
#include "fluxheat/sweep.hpp"
#include "fluxheat/thermal.hpp"

namespace fluxheat {

namespace {

// deterministic 64-bit LCG, uniform in [0, 1)
struct Lcg {
    unsigned long long state = 0x9e3779b97f4a7c15ull;
    double next() {
        state = 6364136223846793005ull * state + 1442695040888963407ull;
        return static_cast<double>(state >> 11) / 9007199254740992.0;
    }
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

CheckResult check(const std::string& name, bool ok, const std::string& detail) {
    return {name, ok ? CheckResult::Status::pass : CheckResult::Status::fail,
            detail};
}

CheckResult skip(const std::string& name, const std::string& why) {
    return {name, CheckResult::Status::skipped, why};
}

}  // namespace

std::vector<CheckResult> run_validation(const DeviceParams& p,
                                        const ValidationFault* fault) {
    std::vector<CheckResult> out;
    p.validate();
    const double energyScale = fault ? fault->closedFormEnergyScale : 1.0;

    // constant identities
    {
        const bool ok = phys::phi0 == phys::h / (2.0 * phys::e) &&
                        phys::hbar == phys::h / (2.0 * phys::pi);
        out.push_back(check("constants", ok, "Phi0 = h/2e, hbar = h/2pi"));
    }

    // closed-form vs numeric eigensystem
    if (!p.symmetric()) {
        out.push_back(skip("eigen-cross-check", "asymmetric device, no closed form"));
    } else {
        Lcg rng;
        double worstE = 0.0, worstOv = 1.0;
        for (int it = 0; it < 300; ++it) {
            const double flux = rng.next();
            EigenSystem cf = eigensystem_closed_form(p, flux);
            for (double& e : cf.energies) e *= energyScale;
            const EigenSystem nm =
                eigensystem_numeric(build_hamiltonian(p, flux), flux, &cf);
            const double scale = phys::h * (p.fq0 + p.fr1);
            for (int k = 0; k < 4; ++k) {
                const double denom = std::max(std::fabs(cf.energies[k]), 1e-3 * scale);
                worstE = std::max(worstE,
                                  std::fabs(cf.energies[k] - nm.energies[k]) / denom);
                double ov = 0.0;
                for (int i = 0; i < 4; ++i) ov += cf.coeffs[k][i] * nm.coeffs[k][i];
                worstOv = std::min(worstOv, std::fabs(ov));
            }
        }
        out.push_back(check("eigen-cross-check",
                            worstE <= 1e-10 && worstOv >= 1.0 - 1e-8,
                            "max energy deviation " + num(worstE) +
                                ", min overlap deviation " + num(1.0 - worstOv)));
    }

    // per-reservoir detailed balance
    {
        double worst = 0.0;
        for (const double flux : {0.5, 0.47, 0.42, 0.36}) {
            const EigenSystem eig = eigensystem_for(p, flux);
            const Mat4 elems = matrix_elements(eig, p);
            const double T1 = 0.3, T2 = 0.08;
            const RateSet rs = transition_rates(elems, eig,
                                                reservoir_channel(p, 1, T1),
                                                reservoir_channel(p, 2, T2));
            for (int r = 1; r <= 2; ++r) {
                const Mat4& g = r == 1 ? rs.gammaR1 : rs.gammaR2;
                const double T = r == 1 ? T1 : T2;
                for (int i = 0; i < 4; ++i) {
                    for (int j = 0; j < 4; ++j) {
                        if (i == j || g[i][j] <= 0.0 || g[j][i] <= 0.0) continue;
                        const double expected =
                            std::exp(phys::hbar * rs.omega[i][j] / (phys::kB * T));
                        if (!std::isfinite(expected) || expected == 0.0) continue;
                        worst = std::max(worst, std::fabs(g[i][j] / g[j][i] - expected) /
                                                    expected);
                    }
                }
            }
        }
        out.push_back(check("detailed-balance", worst <= 1e-8,
                            "max relative deviation " + num(worst)));
    }

    // dark state
    if (p.g1 != p.g2) {
        out.push_back(skip("dark-state", "g1 != g2, state 1 couples"));
    } else {
        bool ok = true;
        for (const double flux : {0.5, 0.46}) {
            const EigenSystem eig = eigensystem_for(p, flux);
            const RateSet rs = transition_rates(matrix_elements(eig, p), eig,
                                                reservoir_channel(p, 1, 0.3),
                                                reservoir_channel(p, 2, 0.08));
            for (int j = 0; j < 4; ++j)
                ok = ok && rs.gammaR1[1][j] == 0.0 && rs.gammaR1[j][1] == 0.0 &&
                     rs.gammaR2[1][j] == 0.0 && rs.gammaR2[j][1] == 0.0;
            ok = ok && steady_state(rs)[1] == 0.0;
        }
        out.push_back(check("dark-state", ok,
                            "state 1 has zero rates and zero population"));
    }

    // steady-state dual route
    {
        const EigenSystem eig = eigensystem_for(p, 0.48);
        const RateSet rs = transition_rates(matrix_elements(eig, p), eig,
                                            reservoir_channel(p, 1, 0.3),
                                            reservoir_channel(p, 2, 0.08));
        const Mat4 g = rs.total();
        bool dark = true;
        for (int j = 0; j < 4; ++j)
            dark = dark && g[1][j] == 0.0 && g[j][1] == 0.0;
        if (!dark) {
            out.push_back(skip("steady-state-dual-route",
                               "state 1 couples, closed form not applicable"));
        } else {
            const Vec4 a = steady_state_closed_form(g);
            const Vec4 b = steady_state_nullspace(g);
            double worst = 0.0;
            for (int k = 0; k < 4; ++k)
                worst = std::max(worst, std::fabs(a[k] - b[k]));
            out.push_back(check("steady-state-dual-route", worst <= 1e-10,
                                "max population difference " + num(worst)));
        }
    }

    // equilibrium null power
    {
        const double peak = point_power(p, 0.5, 0.3, 0.08);
        const double eq = point_power(p, 0.5, 0.08, 0.08);
        const bool ok = std::fabs(eq) < 1e-3 * std::fabs(peak);
        out.push_back(check("equilibrium-null-power", ok,
                            "|P(T1=T2)| = " + num(std::fabs(eq)) + " W vs peak " +
                                num(std::fabs(peak)) + " W"));
    }

    // flux mirror symmetry
    if (!p.symmetric()) {
        out.push_back(skip("flux-mirror-symmetry", "asymmetric device"));
    } else {
        double worst = 0.0;
        for (const double delta : {0.01, 0.035, 0.1}) {
            const double a = point_power(p, 0.5 + delta, 0.3, 0.08);
            const double b = point_power(p, 0.5 - delta, 0.3, 0.08);
            worst = std::max(worst, std::fabs(a - b) / std::max(std::fabs(a), 1e-300));
        }
        out.push_back(check("flux-mirror-symmetry", worst <= 1e-9,
                            "max relative asymmetry " + num(worst)));
    }

    // electron-phonon round trip
    {
        double worst = 0.0;
        for (const double T0 : {0.05, 0.08, 0.2})
            for (const double Te : {0.081, 0.1, 0.25, 0.36}) {
                if (Te <= T0) continue;
                const double P = ep_power(p.sigmaV2, p.nExp, Te, T0);
                const double back = invert_ep_power(p.sigmaV2, p.nExp, P, T0);
                worst = std::max(worst, std::fabs(back - Te) / Te);
            }
        out.push_back(check("ep-round-trip", worst <= 1e-12,
                            "max relative error " + num(worst)));
    }

    // calibration round trip on a synthetic curve
    {
        const double aT = 0.6878471508410534, bT = 0.13821178771026335,
                     cT = 4.0e-4;
        const std::array<double, 4> pT{0.29507575757575893, 2173.484848484823,
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
        bool ok = true;
        std::string detail;
        try {
            const CalibrationCurve curve = fit_calibration(pts);
            double worst = std::fabs(curve.a - aT) / std::fabs(aT);
            worst = std::max(worst, std::fabs(curve.b - bT) / std::fabs(bT));
            worst = std::max(worst, std::fabs(curve.c - cT) / std::fabs(cT));
            for (int k = 0; k < 4; ++k)
                worst = std::max(worst,
                                 std::fabs(curve.poly[k] - pT[k]) / std::fabs(pT[k]));
            ok = worst <= 0.01;
            detail = "max coefficient error " + num(worst);
        } catch (const Error& err) {
            ok = false;
            detail = err.what();
        }
        out.push_back(check("calibration-round-trip", ok, detail));
    }

    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (r.status == CheckResult::Status::fail) return false;
    return true;
}

std::string format_validation_report(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    for (const CheckResult& r : results) {
        const char* tag = r.status == CheckResult::Status::pass      ? "PASS"
                          : r.status == CheckResult::Status::skipped ? "SKIP"
                                                                     : "FAIL";
        out << tag << "  " << r.name << ": " << r.detail << "\n";
    }
    return out.str();
}

}  // namespace fluxheat
