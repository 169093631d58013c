#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kan {

struct VerifyOptions {
    std::optional<long> nmax;  // overrides a suite's main n range
    std::uint64_t seed = 2;
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Suite names, index i holding criterion i+1.
const std::vector<std::string>& suite_names();
// -1 when unknown.
int suite_index(const std::string& name);

CriterionResult run_criterion(int id, const VerifyOptions& opts);

}  // namespace kan
