#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kan/roots.hpp"

namespace kan {

// Target localization set: either the vertical line Re x = 1/2, or the union
// of the two vertical rays from the sixth roots of unity (L), the arc of
// |x-1| = 1 through 0 (A1), and the arc of |x| = 1 through 1 (A2). The three
// pieces of the union meet exactly in the two sixth roots of unity.
struct CurveFamily {
    enum class Kind { Line, ThreeCurve };
    Kind kind = Kind::Line;

    static CurveFamily line() { return {Kind::Line}; }
    static CurveFamily three_curve() { return {Kind::ThreeCurve}; }

    std::vector<std::string> piece_names() const {
        if (kind == Kind::Line) return {"line"};
        return {"L", "A1", "A2"};
    }
};

struct RootAssignment {
    std::size_t root = 0;
    int piece = -1;          // index into piece_names(); -1 when failed
    double distance = 0.0;   // distance to the chosen piece
    bool ambiguous = false;  // within tolerance of more than one piece
    bool failed = false;     // farther than tolerance from every piece
};

struct Classification {
    std::vector<RootAssignment> assignments;
    std::vector<double> piece_counts;  // fractional under ambiguity
    double max_distance = 0.0;         // over non-failed roots
    std::size_t failures = 0;
};

// Distances are evaluated at the cloud's precision; a root within tolerance
// of several pieces (possible only near the common endpoints) is split
// fractionally between them and flagged.
Classification classify_roots(const RootCloud& cloud, const CurveFamily& family, double curve_tol);

struct SymmetryReport {
    double worst_mirror = 0.0;     // x -> 1-x partner mismatch
    double worst_inversion = 0.0;  // x -> 1/x partner mismatch
    std::vector<std::vector<std::size_t>> orbits;
    bool all_orbits_size_six = false;
};

// Checks that 1-r and 1/r land on roots for every root r, and extracts the
// orbit partition generated by the two maps.
SymmetryReport symmetry_check(const RootCloud& cloud, double tol);

// CSV export: header plus one row (re, im, residual, piece, distance) per
// root at full working precision. Rows failing classification say "off-curve".
void write_root_csv(const std::string& path, const RootCloud& cloud,
                    const std::optional<CurveFamily>& family,
                    const std::optional<Classification>& classification,
                    std::uint64_t seed);

}  // namespace kan
