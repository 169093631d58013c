#pragma once

#include <vector>

#include "kan/bigfloat.hpp"
#include "kan/rational.hpp"
#include "kan/roots.hpp"

namespace kan {

// Guaranteed count of roots of K on the vertical ray, from
// floor(n/2) - ceil((n/pi) * acos(min(1, 1/(2|a|)))), clamped at zero.
// The ceiling is certified with directed rounding; the two cases where the
// argument is a rational multiple of pi (|a| <= 1/2 and |a| = 1) are exact.
long theorem1_bound(const Rat& a, long n);

// One zero of f(t) = 2 cos(nt) + (2a cos t)^n inside a grid bracket, with its
// image x = 1/2 + (i/2) tan t on the vertical line.
struct ThetaRoot {
    BigFloat theta;
    long bracket_index = 0;  // zero lies in (k pi/n, (k+1) pi/n)
    BigComplex mapped_x;
};

// All bracketed zeros of f on [theta_min, pi/2), by bisection (the bracket
// endpoints provably carry opposite signs). Residuals of the mapped points
// against K are certified; a sign violation at a grid point throws
// std::runtime_error("theorem violation...").
std::vector<ThetaRoot> theta_roots(const Rat& a, long n, const PrecisionPolicy& policy = {});

struct DensityEntry {
    long n = 0;
    long root_count = 0;
    bool every_interval_covered = false;
    bool vacuous = false;   // no grid interval inside the domain
    double max_gap = 0.0;   // widest spacing between adjacent zeros, domain edges included
};

struct DensityReport {
    std::vector<DensityEntry> per_n;
    // max gap over the union of zeros accumulated across the prefix of n_list
    std::vector<double> accumulated_max_gap;
};

DensityReport density_report(const Rat& a, const std::vector<long>& n_list, const PrecisionPolicy& policy = {});

}  // namespace kan
