#pragma once

#include "illumcover/covering.hpp"

#include <string>

namespace illumcover {

struct RunConfig {
    Mode mode = Mode::Exact;
    double margin = kDefaultMargin;   // (0, 1e-3]
    int q = 24;                       // phase grid, >= 8
    int t_depth = 30;
    long long budget = 1000000;       // solver node budget, >= 1e3
    int threads = 1;
    std::string out;

    void validate() const;
};

// key=value lines; '#' comments and blank lines ignored. Flags override the
// file, so the caller applies this first.
RunConfig load_config_file(const std::string& path, RunConfig base = {});
RunConfig apply_config_line(const std::string& key, const std::string& value, RunConfig base);

}  // namespace illumcover
