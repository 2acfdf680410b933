#include "fluxheat/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "fluxheat/errors.hpp"
#include "fluxheat/linalg.hpp"

namespace fluxheat {

namespace {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct ScaledCubic {
    double mean = 0.0, scale = 1.0;
    std::array<double, 4> q{};  // T = sum q[k] u^k, u = (V - mean)/scale

    double eval(double v) const {
        const double u = (v - mean) / scale;
        return ((q[3] * u + q[2]) * u + q[1]) * u + q[0];
    }
};

ScaledCubic fit_cubic(const std::vector<CalibrationPoint>& pts, double* rms) {
    ScaledCubic fit;
    const int n = static_cast<int>(pts.size());
    double mean = 0.0;
    for (const auto& [v, t] : pts) mean += v;
    mean /= n;
    double var = 0.0;
    for (const auto& [v, t] : pts) var += (v - mean) * (v - mean);
    fit.mean = mean;
    fit.scale = std::sqrt(var / n);

    // normal equations sum_i u^{r+c} q_c = sum_i u^r T_i
    std::vector<double> a(16, 0.0), b(4, 0.0);
    for (const auto& [v, t] : pts) {
        const double u = (v - fit.mean) / fit.scale;
        double pw[7];
        pw[0] = 1.0;
        for (int k = 1; k < 7; ++k) pw[k] = pw[k - 1] * u;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) a[r * 4 + c] += pw[r + c];
            b[r] += pw[r] * t;
        }
    }
    if (!solve_dense(a, b, 4))
        throw DataError("calibration: degenerate cubic fit (collinear voltages)");
    for (int k = 0; k < 4; ++k) fit.q[k] = b[k];

    double ss = 0.0;
    for (const auto& [v, t] : pts) {
        const double r = t - fit.eval(v);
        ss += r * r;
    }
    if (rms) *rms = std::sqrt(ss / n);
    return fit;
}

// expand T = sum q[k] ((V - m)/s)^k into monomial coefficients of V
std::array<double, 4> to_monomial(const ScaledCubic& f) {
    std::array<double, 4> p{};
    const double c0 = -f.mean / f.scale;
    const double c1 = 1.0 / f.scale;
    // ((V-m)/s)^k = (c0 + c1 V)^k, binomial expansion
    double binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    for (int k = 0; k < 4; ++k) {
        for (int j = 0; j <= k; ++j) {
            p[j] += f.q[k] * binom[k][j] * std::pow(c0, k - j) * std::pow(c1, j);
        }
    }
    return p;
}

}  // namespace

CalibrationCurve fit_calibration(std::vector<CalibrationPoint> points,
                                 double breakTemp) {
    if (!(breakTemp > 0)) throw ParamError("fit_calibration: breakTemp must be > 0");
    std::sort(points.begin(), points.end());
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].first <= points[i - 1].first ||
            points[i].second >= points[i - 1].second)
            throw DataError(
                "calibration: input is not strictly monotone (temperature "
                "must decrease with voltage)");
    }

    std::vector<CalibrationPoint> high, low;  // high temperature = low voltage
    for (const auto& pt : points)
        (pt.second >= breakTemp ? high : low).push_back(pt);
    if (high.size() < 4 || low.size() < 4)
        throw DataError("calibration: need at least 4 points in each range "
                        "(have " + std::to_string(high.size()) + " above and " +
                        std::to_string(low.size()) + " below the break point)");

    CalibrationCurve curve;
    curve.breakTemp = breakTemp;
    curve.vMin = points.front().first;
    curve.vMax = points.back().first;

    const ScaledCubic cubic = fit_cubic(high, &curve.highRms);
    curve.poly = to_monomial(cubic);

    // break voltage: root of cubic(V) = breakTemp. The fitted curve falls
    // with voltage, so the first data voltage where it dips below the break
    // temperature brackets the root (fit residual can push it a hair past
    // the nominal range boundary).
    int firstBelow = -1;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (cubic.eval(points[i].first) - breakTemp < 0.0) {
            firstBelow = static_cast<int>(i);
            break;
        }
    }
    if (firstBelow <= 0)
        throw DataError("calibration: fitted cubic does not cross the break "
                        "temperature inside the calibrated span");
    double lo = points[firstBelow - 1].first;
    double hi = points[firstBelow].first;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (cubic.eval(mid) - breakTemp >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    curve.breakVoltage = 0.5 * (lo + hi);

    // low range anchored at (breakVoltage, breakTemp):
    //   T = breakTemp + b [log10(c - V) - log10(c - Vb)]
    // linear in b for fixed c; golden-section search over log(c - vmaxLow)
    const double vb = curve.breakVoltage;
    const double vmaxLow = low.back().first;
    const double span = std::max(vmaxLow - low.front().first, 1e-12);
    const auto sse = [&](double c, double* bOut) {
        double sxx = 0.0, sxy = 0.0;
        for (const auto& [v, t] : low) {
            const double x = std::log10(c - v) - std::log10(c - vb);
            const double y = t - breakTemp;
            sxx += x * x;
            sxy += x * y;
        }
        const double b = sxx > 0.0 ? sxy / sxx : 0.0;
        double ss = 0.0;
        for (const auto& [v, t] : low) {
            const double r = (t - breakTemp) -
                             b * (std::log10(c - v) - std::log10(c - vb));
            ss += r * r;
        }
        if (bOut) *bOut = b;
        return ss;
    };

    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    double ua = std::log(1e-4 * span), ub = std::log(1e4 * span);
    double u1 = ub - golden * (ub - ua);
    double u2 = ua + golden * (ub - ua);
    double f1 = sse(vmaxLow + std::exp(u1), nullptr);
    double f2 = sse(vmaxLow + std::exp(u2), nullptr);
    for (int it = 0; it < 200; ++it) {
        if (f1 < f2) {
            ub = u2;
            u2 = u1;
            f2 = f1;
            u1 = ub - golden * (ub - ua);
            f1 = sse(vmaxLow + std::exp(u1), nullptr);
        } else {
            ua = u1;
            u1 = u2;
            f1 = f2;
            u2 = ua + golden * (ub - ua);
            f2 = sse(vmaxLow + std::exp(u2), nullptr);
        }
    }
    curve.c = vmaxLow + std::exp(0.5 * (ua + ub));
    double ss = sse(curve.c, &curve.b);
    curve.a = breakTemp - curve.b * std::log10(curve.c - vb);
    curve.lowRms = std::sqrt(ss / static_cast<double>(low.size()));
    return curve;
}

double voltage_to_temperature(const CalibrationCurve& curve, double voltage) {
    if (voltage < curve.vMin || voltage > curve.vMax)
        throw DataError("voltage " + format_full(voltage) +
                        " outside the calibrated span [" +
                        format_full(curve.vMin) + ", " + format_full(curve.vMax) +
                        "]");
    if (voltage >= curve.breakVoltage)
        return curve.a + curve.b * std::log10(curve.c - voltage);
    const double v = voltage;
    return ((curve.poly[3] * v + curve.poly[2]) * v + curve.poly[1]) * v +
           curve.poly[0];
}

std::vector<CalibrationPoint> parse_calibration_points(const std::string& text) {
    std::vector<CalibrationPoint> pts;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (char& ch : line)
            if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
        std::istringstream ls(line);
        double v, t;
        if (!(ls >> v)) continue;  // blank or comment-only line
        if (!(ls >> t))
            throw DataError("calibration points line " + std::to_string(lineNo) +
                            ": expected two columns (voltage temperature)");
        std::string extra;
        if (ls >> extra)
            throw DataError("calibration points line " + std::to_string(lineNo) +
                            ": trailing content '" + extra + "'");
        pts.emplace_back(v, t);
    }
    return pts;
}

std::vector<CalibrationPoint> load_calibration_points(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open calibration points file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_calibration_points(buf.str());
}

std::string serialize_calibration_curve(const CalibrationCurve& c) {
    std::ostringstream out;
    out << "# thermometer calibration curve: T = a + b*log10(c - V) for "
           "V >= break_voltage,\n";
    out << "# cubic p0 + p1 V + p2 V^2 + p3 V^3 below; SI units\n";
    out << "a " << format_full(c.a) << "\n";
    out << "b " << format_full(c.b) << "\n";
    out << "c " << format_full(c.c) << "\n";
    for (int k = 0; k < 4; ++k)
        out << "p" << k << " " << format_full(c.poly[k]) << "\n";
    out << "break_temp " << format_full(c.breakTemp) << "\n";
    out << "break_voltage " << format_full(c.breakVoltage) << "\n";
    out << "vmin " << format_full(c.vMin) << "\n";
    out << "vmax " << format_full(c.vMax) << "\n";
    out << "low_rms " << format_full(c.lowRms) << "\n";
    out << "high_rms " << format_full(c.highRms) << "\n";
    return out.str();
}

CalibrationCurve parse_calibration_curve(const std::string& text) {
    std::map<std::string, double> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        double value;
        if (!(ls >> key)) continue;
        if (!(ls >> value))
            throw DataError("calibration curve: malformed line '" + line + "'");
        kv[key] = value;
    }
    const auto get = [&](const std::string& key) {
        const auto it = kv.find(key);
        if (it == kv.end())
            throw DataError("calibration curve: missing key '" + key + "'");
        return it->second;
    };
    CalibrationCurve c;
    c.a = get("a");
    c.b = get("b");
    c.c = get("c");
    for (int k = 0; k < 4; ++k) c.poly[k] = get("p" + std::to_string(k));
    c.breakTemp = get("break_temp");
    c.breakVoltage = get("break_voltage");
    c.vMin = get("vmin");
    c.vMax = get("vmax");
    c.lowRms = get("low_rms");
    c.highRms = get("high_rms");
    return c;
}

CalibrationCurve load_calibration_curve(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DataError("cannot open calibration curve file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_calibration_curve(buf.str());
}

}  // namespace fluxheat
