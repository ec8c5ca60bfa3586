#include "illumcover/config.hpp"

#include <fstream>

namespace illumcover {

void RunConfig::validate() const {
    if (!(margin > 0 && margin <= 1e-3)) throw DomainError("config: margin must lie in (0, 1e-3]");
    if (q < 8) throw DomainError("config: phase grid must be >= 8");
    if (budget < 1000) throw DomainError("config: node budget must be >= 1000");
    if (t_depth < 1 || t_depth > 60) throw DomainError("config: t-grid depth must lie in [1,60]");
    if (threads < 1) throw DomainError("config: threads must be >= 1");
}

RunConfig apply_config_line(const std::string& key, const std::string& value, RunConfig base) {
    if (key == "mode") {
        if (value == "exact")
            base.mode = Mode::Exact;
        else if (value == "float")
            base.mode = Mode::Float;
        else
            throw ParseError("config: unknown mode '" + value + "'");
    } else if (key == "margin") {
        base.margin = std::stod(value);
    } else if (key == "q") {
        base.q = std::stoi(value);
    } else if (key == "tdepth") {
        base.t_depth = std::stoi(value);
    } else if (key == "budget") {
        base.budget = std::stoll(value);
    } else if (key == "threads") {
        base.threads = std::stoi(value);
    } else if (key == "out") {
        base.out = value;
    } else {
        throw ParseError("config: unknown key '" + key + "'");
    }
    return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("config: expected key=value, got '" + line + "'");
        base = apply_config_line(line.substr(0, eq), line.substr(eq + 1), base);
    }
    base.validate();
    return base;
}

}  // namespace illumcover
