#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace fluxheat {

// NIS thermometer calibration: temperature vs thermal voltage, fitted
// piecewise. Below breakTemp the curve is T = a + b*log10(c - V); above it
// a cubic polynomial in V. Temperature decreases monotonically with
// voltage, so the low-temperature branch covers the high-voltage end.
struct CalibrationCurve {
    double a = 0.0, b = 0.0, c = 0.0;   // low range, T = a + b log10(c - V)
    std::array<double, 4> poly{};       // high range, T = p0 + p1 V + p2 V^2 + p3 V^3
    double breakTemp = 0.135;           // K, range boundary
    double breakVoltage = 0.0;          // V at the boundary
    double vMin = 0.0, vMax = 0.0;      // calibrated voltage span
    double lowRms = 0.0, highRms = 0.0; // fit residuals, K
};

using CalibrationPoint = std::pair<double, double>;  // (voltage V, temperature K)

// Least-squares fit of both branches, anchored so they meet exactly at the
// break temperature. Needs >= 4 points per range with strictly decreasing
// temperature vs voltage; throws DataError otherwise. Fixed iteration
// counts, so coefficients are bit-reproducible.
CalibrationCurve fit_calibration(std::vector<CalibrationPoint> points,
                                 double breakTemp = 0.135);

// Piecewise evaluation; throws DataError outside the calibrated span.
double voltage_to_temperature(const CalibrationCurve& curve, double voltage);

// Two-column text files: voltage [V], temperature [K], '#' comments.
std::vector<CalibrationPoint> parse_calibration_points(const std::string& text);
std::vector<CalibrationPoint> load_calibration_points(const std::string& path);

// Curve files: key value lines with full-precision coefficients.
std::string serialize_calibration_curve(const CalibrationCurve& curve);
CalibrationCurve parse_calibration_curve(const std::string& text);
CalibrationCurve load_calibration_curve(const std::string& path);

}  // namespace fluxheat
