#include "fluxheat/manifest.hpp"

#include <sstream>

namespace fluxheat {

std::string manifest_header(const RunManifest& m) {
    std::ostringstream out;
    out << "# " << kToolName << " " << kToolVersion << "\n";
    out << "# subcommand: " << m.subcommand << "\n";
    out << "# config: " << (m.configPath.empty() ? "<built-in preset>" : m.configPath)
        << "\n";
    std::istringstream params(serialize_device_config(m.params));
    std::string line;
    while (std::getline(params, line)) out << "# param " << line << "\n";
    for (const std::string& path : m.outputPaths)
        out << "# output: " << path << "\n";
    return out.str();
}

}  // namespace fluxheat
