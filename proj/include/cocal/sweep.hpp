#pragma once

#include "cocal/classifier.hpp"
#include "cocal/constructor.hpp"

#include <string>
#include <vector>

namespace cocal {

struct SweepItem {
    AlgebraId g4, g3;
    bool exists = false;
    std::string label;  // route tag or obstruction tag
    bool cert_ok = false;
    std::string error;
};

struct SweepResult {
    std::vector<SweepItem> items;
    int exists_count = 0;
    int not_exists_count = 0;
    int cert_failures = 0;
    double seconds = 0;
};

// Full catalog grid. With certificates, every Exists pair is constructed and
// re-verified. The parallel flavor distributes pairs over OpenMP threads;
// the serial one is the reference the tests compare against.
SweepResult run_sweep(bool parallel, bool with_certificates,
                      const ParamOverride* params = nullptr);

}  // namespace cocal
