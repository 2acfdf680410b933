#include "fluxheat/steady.hpp"

#include <cmath>

#include "fluxheat/constants.hpp"
#include "fluxheat/errors.hpp"
#include "fluxheat/linalg.hpp"
#include "fluxheat/qubit.hpp"

namespace fluxheat {

namespace {

bool state_disconnected(const Mat4& g, int s) {
    for (int j = 0; j < 4; ++j)
        if (g[s][j] != 0.0 || g[j][s] != 0.0) return false;
    return true;
}

}  // namespace

Vec4 steady_state_closed_form(const Mat4& g) {
    const double A = g[2][0] * g[3][0] + g[2][3] * g[3][0] + g[2][0] * g[3][2];
    const double B = g[0][2] * g[3][0] + g[0][2] * g[3][2] + g[0][3] * g[3][2];
    const double C = g[0][3] * g[2][0] + g[0][2] * g[2][3] + g[0][3] * g[2][3];
    const double sum = A + B + C;
    if (!(sum > 0.0))
        throw DegenerateSystemError(
            "closed-form steady state: no complete cycle among states "
            "{0, 2, 3}");
    return {A / sum, 0.0, B / sum, C / sum};
}

Vec4 steady_state_nullspace(const Mat4& g) {
    // isolated states carry no population; solve the balance equations on
    // the rest, with the last row replaced by normalization
    int active[4];
    int n = 0;
    for (int s = 0; s < 4; ++s)
        if (!state_disconnected(g, s)) active[n++] = s;
    if (n == 0)
        throw DegenerateSystemError("steady state: all rates are zero");

    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<double> b(n, 0.0);
    for (int r = 0; r < n - 1; ++r) {
        const int i = active[r];
        double out = 0.0;
        for (int j = 0; j < 4; ++j) out += g[i][j];
        for (int c = 0; c < n; ++c) {
            const int j = active[c];
            a[r * n + c] = (i == j) ? -out : g[j][i];
        }
    }
    for (int c = 0; c < n; ++c) a[(n - 1) * n + c] = 1.0;
    b[n - 1] = 1.0;

    if (!solve_dense(a, b, n))
        throw DegenerateSystemError(
            "steady state: rate graph is disconnected, no unique solution");

    Vec4 rho{};
    double sum = 0.0;
    for (int c = 0; c < n; ++c) {
        double v = b[c];
        if (v < 0.0 && v > -1e-12) v = 0.0;  // roundoff clamp
        rho[active[c]] = v;
        sum += v;
    }
    for (double& v : rho) v /= sum;
    return rho;
}

Vec4 steady_state(const RateSet& rates) {
    const Mat4 g = rates.total();
    if (state_disconnected(g, 1)) {
        const double A = g[2][0] * g[3][0] + g[2][3] * g[3][0] + g[2][0] * g[3][2];
        const double B = g[0][2] * g[3][0] + g[0][2] * g[3][2] + g[0][3] * g[3][2];
        const double C = g[0][3] * g[2][0] + g[0][2] * g[2][3] + g[0][3] * g[2][3];
        if (A + B + C > 0.0) return steady_state_closed_form(g);
    }
    return steady_state_nullspace(g);
}

double transported_power(const Vec4& rho, const RateSet& rates, int reservoir) {
    if (reservoir != 1 && reservoir != 2)
        throw ParamError("reservoir index must be 1 or 2");
    const Mat4& g = reservoir == 2 ? rates.gammaR2 : rates.gammaR1;
    double power = 0.0;
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
            if (k != l)
                power += rho[k] * phys::hbar * rates.omega[k][l] * g[k][l];
    return power;
}

SteadyState solve_steady(const RateSet& rates) {
    SteadyState ss;
    ss.rho = steady_state(rates);
    ss.powerTo2 = transported_power(ss.rho, rates, 2);
    ss.powerTo1 = transported_power(ss.rho, rates, 1);
    return ss;
}

double bare_resistor_power(const DeviceParams& p, double T1, double fluxFrac,
                           Occupation occ) {
    if (!(T1 > 0)) throw ParamError("bare_resistor_power: T1 must be > 0");
    const double w01 = 2.0 * phys::pi * qubit_frequency(p, fluxFrac);
    const double x = phys::hbar * w01 / (phys::kB * T1);
    const double occFactor = occ == Occupation::bose
                                 ? 1.0 / std::expm1(x)
                                 : 1.0 / (-std::expm1(-x));
    const double wl = w01 * p.L;
    return p.Ip * p.Ip * p.R * wl * wl / (p.R * p.R + wl * wl) * occFactor;
}

double bare_resistor_power_max(const DeviceParams& p, double T1,
                               double fluxFrac) {
    if (!(T1 > 0)) throw ParamError("bare_resistor_power_max: T1 must be > 0");
    const double w01 = 2.0 * phys::pi * qubit_frequency(p, fluxFrac);
    const double x = phys::hbar * w01 / (phys::kB * T1);
    return p.Ip * p.Ip * p.L * w01 / std::expm1(x);
}

}  // namespace fluxheat
