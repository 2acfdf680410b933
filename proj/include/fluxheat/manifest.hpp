#pragma once

#include <string>
#include <vector>

#include "fluxheat/device.hpp"

namespace fluxheat {

inline constexpr const char* kToolName = "fluxheat";
inline constexpr const char* kToolVersion = "0.1.0";

// Provenance of one CLI run. The timestamp is kept for reporting only and
// never written into output files, which must be byte-identical across runs
// with the same config.
struct RunManifest {
    std::string subcommand;
    std::string configPath;   // empty when a built-in preset was used
    DeviceParams params;
    std::vector<std::string> outputPaths;
    std::string timestamp;    // ISO 8601, informational
};

// '#'-prefixed header lines recording the manifest (without the timestamp).
std::string manifest_header(const RunManifest& m);

}  // namespace fluxheat
