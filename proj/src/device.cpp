#include "fluxheat/device.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "fluxheat/errors.hpp"

namespace fluxheat {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw ParamError(std::string("invalid device parameters: ") + what);
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void DeviceParams::validate() const {
    require(R > 0, "R must be > 0");
    require(L > 0, "L must be > 0");
    require(M > 0, "M must be > 0");
    require(Ip > 0, "Ip must be > 0");
    require(fq0 > 0, "fq0 must be > 0");
    require(fr1 > 0, "fr1 must be > 0");
    require(fr2 > 0, "fr2 must be > 0");
    require(Zinf > 0, "Zinf must be > 0");
    require(sigmaV1 > 0, "sigmaV1 must be > 0");
    require(sigmaV2 > 0, "sigmaV2 must be > 0");
    require(g1 >= 0, "g1 must be >= 0");
    require(g2 >= 0, "g2 must be >= 0");
    require(nExp >= 3, "nExp must be >= 3");
    require(M <= L, "M must not exceed L");
}

DeviceParams device_preset(const std::string& name) {
    if (name == "device1") {
        return DeviceParams{};
    }
    if (name == "device2") {
        DeviceParams p;
        p.Ip = 21e-9;
        p.fq0 = 3.9e9;
        p.fr1 = p.fr2 = 6.4e9;
        return p;
    }
    throw ParamError("unknown device preset '" + name + "'");
}

DeviceParams parse_device_config(const std::string& text) {
    DeviceParams p;
    std::map<std::string, bool> seen;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto notSpace = [](unsigned char ch) { return !std::isspace(ch); };
        line.erase(line.begin(), std::find_if(line.begin(), line.end(), notSpace));
        line.erase(std::find_if(line.rbegin(), line.rend(), notSpace).base(), line.end());
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParamError("config line " + std::to_string(lineNo) +
                             ": expected 'key = value'");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        key.erase(std::find_if(key.rbegin(), key.rend(), notSpace).base(), key.end());
        value.erase(value.begin(), std::find_if(value.begin(), value.end(), notSpace));
        if (key.empty() || value.empty())
            throw ParamError("config line " + std::to_string(lineNo) +
                             ": expected 'key = value'");
        if (seen[key])
            throw ParamError("config: duplicate key '" + key + "'");
        seen[key] = true;

        const auto number = [&](double& dst) {
            std::size_t used = 0;
            double v = 0;
            try {
                v = std::stod(value, &used);
            } catch (const std::exception&) {
                throw ParamError("config: malformed value for '" + key + "': " + value);
            }
            if (used != value.size())
                throw ParamError("config: malformed value for '" + key + "': " + value);
            dst = v;
        };

        if (key == "R") number(p.R);
        else if (key == "L") number(p.L);
        else if (key == "M") number(p.M);
        else if (key == "Ip") number(p.Ip);
        else if (key == "fq0") number(p.fq0);
        else if (key == "fr1") number(p.fr1);
        else if (key == "fr2") number(p.fr2);
        else if (key == "g1") number(p.g1);
        else if (key == "g2") number(p.g2);
        else if (key == "gamma12") number(p.gamma12);
        else if (key == "Zinf") number(p.Zinf);
        else if (key == "sigmaV1") number(p.sigmaV1);
        else if (key == "sigmaV2") number(p.sigmaV2);
        else if (key == "nExp") {
            double v = 0;
            number(v);
            if (v != static_cast<int>(v))
                throw ParamError("config: nExp must be an integer, got " + value);
            p.nExp = static_cast<int>(v);
        } else {
            throw ParamError("config: unknown key '" + key + "'");
        }
    }
    p.validate();
    return p;
}

DeviceParams load_device_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParamError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_device_config(buf.str());
}

std::string serialize_device_config(const DeviceParams& p) {
    std::ostringstream out;
    out << "R = " << format_full(p.R) << "\n";
    out << "L = " << format_full(p.L) << "\n";
    out << "M = " << format_full(p.M) << "\n";
    out << "Ip = " << format_full(p.Ip) << "\n";
    out << "fq0 = " << format_full(p.fq0) << "\n";
    out << "fr1 = " << format_full(p.fr1) << "\n";
    out << "fr2 = " << format_full(p.fr2) << "\n";
    out << "g1 = " << format_full(p.g1) << "\n";
    out << "g2 = " << format_full(p.g2) << "\n";
    out << "gamma12 = " << format_full(p.gamma12) << "\n";
    out << "Zinf = " << format_full(p.Zinf) << "\n";
    out << "sigmaV1 = " << format_full(p.sigmaV1) << "\n";
    out << "sigmaV2 = " << format_full(p.sigmaV2) << "\n";
    out << "nExp = " << p.nExp << "\n";
    return out.str();
}

}  // namespace fluxheat
