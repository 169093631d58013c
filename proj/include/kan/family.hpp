#pragma once

#include <optional>
#include <string>

#include "kan/omega_ring.hpp"
#include "kan/poly.hpp"
#include "kan/rational.hpp"

namespace kan {

// Parameters of K(x) = x^n + (1-x)^n + a^n. a = 0 and n < 2 are rejected.
struct FamilyParams {
    Rat a;
    long n;

    FamilyParams(Rat a_in, long n_in);
};

// Multiplicities of the trivial factors of K_{-1,n} and the degree that
// remains after stripping them.
struct TrivialFactorReport {
    long n = 0;
    int mult_zero = 0;    // multiplicity of the root 0
    int mult_one = 0;     // multiplicity of the root 1
    int mult_omega = 0;   // multiplicity of the factor x^2 - x + 1
    long tilde_degree = 0;  // d_n
};

struct GcdReport {
    bool predicted_trivial = false;  // exact |a|^{n/(n-1)} < 1/2 test
    RatPoly actual_gcd;              // monic gcd(K, K')
    bool divides_x_pow_plus_an = false;  // gcd | x^{n-1} + a^n, verified by division
};

struct SquarefreeReport {
    bool squarefree = false;
    RatPoly witness;  // the nontrivial gcd when not squarefree
};

// One row of the exact evaluation of K and its first two derivatives at w.
struct OmegaTableRow {
    long n = 0;
    OmegaRat k_value;
    OmegaRat k_prime;
    OmegaRat k_second;
    int omega_multiplicity = 0;  // multiplicity of w as a root of K_{-1,n}
    bool matches_case_table = false;
};

// x^n + (1-x)^n + a^n, expanded exactly.
RatPoly build_k(const FamilyParams& params);

// 2^n * K(x/2) = x^n + (2-x)^n + (2a)^n for a = +-1/2 (integer coefficients).
// Throws std::invalid_argument for other a.
IntPoly build_l_half(const FamilyParams& params);

// Closed-form multiplicities for a = -1, verified against exact division.
TrivialFactorReport trivial_factors(long n);

// d_n from the closed form (pure arithmetic, no polynomials).
long tilde_degree_formula(long n);

// K_{-1,n} with x^mult_zero, (x-1)^mult_one, (x^2-x+1)^mult_omega divided out.
// Each strip verifies a zero remainder and the product is re-checked.
RatPoly tilde_k(long n);

GcdReport gcd_analysis(const FamilyParams& params);

SquarefreeReport squarefree_check(const FamilyParams& params);

Rat evaluate_k(const FamilyParams& params, const Rat& point);

OmegaTableRow verify_omega_table(long n);

}  // namespace kan
