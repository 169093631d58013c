#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kan/rational.hpp"

namespace kan {

// One grid point of the irreducibility scan, as persisted to JSONL.
struct ScanRecord {
    long a_num = 0;
    long a_den = 1;
    long n = 0;
    std::string verdict;      // irreducible | reducible-with-factors | skipped-trivial
    std::string certificate;  // certificate name, or "none" for skips
    std::vector<long> factor_degrees;
    std::uint64_t seed = 0;
    long ms = 0;

    // Semantic identity ignores the timing field.
    bool same_result(const ScanRecord& other) const;
};

std::string scan_record_to_json(const ScanRecord& r);
ScanRecord scan_record_from_json(const std::string& line);

struct ScanBounds {
    long p_max = 20;
    long q_max = 20;
    long n_max = 30;
};

// Deterministic enumeration: p ascending, q ascending over reduced p/q,
// sign + then -, n ascending from 2. a = -1 (and its alias a = 1 with even n,
// the same polynomial) yields skipped-trivial records.
std::vector<std::pair<Rat, long>> scan_grid(const ScanBounds& bounds);

ScanRecord evaluate_grid_point(const Rat& a, long n, std::uint64_t base_seed);

struct ScanSummary {
    long total = 0;
    long irreducible = 0;
    long reducible = 0;
    long skipped = 0;
    long resumed_from = 0;  // records already present
    double elapsed_seconds = 0.0;
};

// Runs the scan, appending one JSONL record per grid point to out_path in
// enumeration order. With resume, previously written complete records are
// kept and the scan continues after the last one (a trailing partial line is
// discarded). Work items run in parallel; writes stay ordered.
ScanSummary run_scan(const ScanBounds& bounds, const std::string& out_path, bool resume,
                     std::uint64_t base_seed, unsigned threads);

}  // namespace kan
