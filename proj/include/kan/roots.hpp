#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kan/bigfloat.hpp"
#include "kan/poly.hpp"

namespace kan {

struct PrecisionPolicy {
    mpfr_prec_t working_bits = 256;
    // Residual certificate: |P(r)| <= 2^residual_log2 * sum_i |c_i| |r|^i,
    // checked at doubled precision.
    long residual_log2 = -100;
    // Distance tolerance for curve membership and root matching.
    double curve_tol = 1e-20;
};

// Certified simultaneous roots of one polynomial. |points| = deg P, with
// multiple roots repeated.
struct RootCloud {
    std::vector<BigComplex> points;
    std::vector<double> rel_residuals;  // |P(r)| / magnitude scale
    std::vector<double> abs_residuals;
    mpfr_prec_t prec = 256;
    bool certified = false;
};

// Aberth-Ehrlich iteration seeded from a double-precision pass, polished with
// a precision ladder and certified a posteriori; restarts at doubled
// precision until the residual certificate holds. Throws on non-convergence
// after the escalation budget.
RootCloud all_roots(const RatPoly& p, const PrecisionPolicy& policy = {});

// Worst distance between a root and the conjugate of its nearest partner
// (real-coefficient inputs should pair up within tolerance).
double conjugation_mismatch(const RootCloud& cloud);

}  // namespace kan
