#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "fluxheat/calibration.hpp"

// deterministic 64-bit LCG, uniform in [0, 1)
struct Lcg {
    std::uint64_t state = 123456789ull;
    double next() {
        state = 6364136223846793005ull * state + 1442695040888963407ull;
        return static_cast<double>(state >> 11) / 9007199254740992.0;
    }
    double in(double lo, double hi) { return lo + (hi - lo) * next(); }
};

inline bool rel_close(double a, double b, double tol) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return std::fabs(a - b) <= tol * std::max(scale, 1e-300);
}

// Synthetic thermometer truth used by the calibration round-trip tests:
// a log branch anchored at (3.0e-4 V, 135 mK) and a cubic through
// (3.0e-4, 135 mK), (2.1e-4, 250 mK), (1.5e-4, 330 mK), (1.0e-4, 370 mK),
// both strictly decreasing in voltage.
namespace synthcal {

inline constexpr double aTrue = 0.6878471508410534;
inline constexpr double bTrue = 0.13821178771026335;
inline constexpr double cTrue = 4.0e-4;
inline constexpr double pTrue[4] = {0.29507575757575893, 2173.484848484823,
                                    -16851851.851851705, 26094276094.275837};

inline double low_branch(double v) {
    return aTrue + bTrue * std::log10(cTrue - v);
}

inline double high_branch(double v) {
    return ((pTrue[3] * v + pTrue[2]) * v + pTrue[1]) * v + pTrue[0];
}

inline double truth(double v) {
    return v > 3.0e-4 ? low_branch(v) : high_branch(v);
}

inline std::vector<fluxheat::CalibrationPoint> points() {
    std::vector<fluxheat::CalibrationPoint> pts;
    for (int i = 0; i < 6; ++i) {
        const double v = 3.6e-4 - i * (3.6e-4 - 3.06e-4) / 5.0;
        pts.emplace_back(v, low_branch(v));
    }
    for (int i = 0; i < 14; ++i) {
        const double v = 3.0e-4 - i * (3.0e-4 - 1.0e-4) / 13.0;
        pts.emplace_back(v, high_branch(v));
    }
    return pts;
}

}  // namespace synthcal
