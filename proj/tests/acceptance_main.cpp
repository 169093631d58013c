// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Ranges and tolerances are pinned in the library (kan/verify.hpp).

#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "kan/verify.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    kan::VerifyOptions opts;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            ids.push_back(std::atoi(argv[++i]));
        } else if (arg == "--seed" && i + 1 < argc) {
            opts.seed = static_cast<std::uint64_t>(std::strtoull(argv[++i], nullptr, 10));
        } else if (arg == "--threads" && i + 1 < argc) {
            opts.threads = static_cast<unsigned>(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: kan_acceptance [--criterion N]... [--seed S] [--threads T]\n";
            return 2;
        }
    }
    if (ids.empty())
        for (int i = 1; i <= 11; ++i) ids.push_back(i);

    bool all_pass = true;
    for (int id : ids) {
        try {
            const kan::CriterionResult r = kan::run_criterion(id, opts);
            std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << " (" << r.name
                      << "): " << r.detail << "  [" << r.seconds << " s]" << std::endl;
            all_pass = all_pass && r.pass;
        } catch (const std::exception& e) {
            std::cout << "[FAIL] criterion " << id << ": exception: " << e.what() << std::endl;
            all_pass = false;
        }
    }
    return all_pass ? 0 : 1;
}
