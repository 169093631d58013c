#pragma once

#include <cstddef>
#include <limits>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kan/rational.hpp"

namespace kan {

class IntPoly;

// Dense univariate polynomial over Q. Coefficients indexed by power, lowest
// first; the highest stored coefficient is nonzero. The zero polynomial is the
// empty sequence and reports the distinguished degree sentinel below.
class RatPoly {
public:
    // Degree of the zero polynomial ("minus infinity"); deliberately not -1.
    static constexpr long kNegInfDegree = std::numeric_limits<long>::min();

    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    RatPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }

    static RatPoly zero() { return RatPoly(); }
    static RatPoly constant(Rat v);
    static RatPoly monomial(std::size_t power, Rat coeff = Rat(1));
    static RatPoly x() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    long degree() const { return c_.empty() ? kNegInfDegree : static_cast<long>(c_.size()) - 1; }

    // Coefficient of x^i; zero beyond the degree.
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& point) const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const RatPoly& rhs);
    RatPoly& operator*=(const Rat& scalar);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(RatPoly a, const Rat& s) { return a *= s; }
    friend RatPoly operator*(const Rat& s, RatPoly a) { return a *= s; }

    bool operator==(const RatPoly& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const RatPoly& rhs) const { return c_ != rhs.c_; }

    std::string str(std::string_view var = "x") const;

private:
    void normalize();
    std::vector<Rat> c_;
};

// Dense univariate polynomial over Z, same conventions as RatPoly.
class IntPoly {
public:
    static constexpr long kNegInfDegree = RatPoly::kNegInfDegree;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { normalize(); }

    static IntPoly constant(Int v);
    static IntPoly monomial(std::size_t power, Int coeff = Int(1));

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    long degree() const { return c_.empty() ? kNegInfDegree : static_cast<long>(c_.size()) - 1; }

    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int eval(const Int& point) const;
    Rat eval(const Rat& point) const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Int& scalar);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }

    bool operator==(const IntPoly& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const IntPoly& rhs) const { return c_ != rhs.c_; }

    std::string str(std::string_view var = "x") const;

private:
    void normalize();
    std::vector<Int> c_;
};

// --- exact arithmetic operations ---

RatPoly derivative(const RatPoly& p);
IntPoly derivative(const IntPoly& p);

// Quotient and remainder over Q; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);

// Exact quotient; throws std::domain_error("not divisible") on nonzero remainder.
RatPoly div_exact(const RatPoly& num, const RatPoly& den);
IntPoly div_exact(const IntPoly& num, const IntPoly& den);

// Monic gcd over Q, computed fraction-free (subresultant PRS on the primitive
// integer scalings). Throws std::domain_error if both inputs are zero.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);
// Primitive gcd with positive leading coefficient, same algorithm.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// content c > 0 and primitive part p/c; throws std::domain_error on zero input.
std::pair<Int, IntPoly> content_primitive(const IntPoly& p);

// P(1-x), exact.
RatPoly compose_one_minus_x(const RatPoly& p);

// Coefficient reversal x^{deg P} * P(1/x).
RatPoly reversed(const RatPoly& p);
IntPoly reversed(const IntPoly& p);

// (1-x)^{deg A} * A(x/(1-x)), expanded exactly. Zero maps to zero.
RatPoly homogenize_at_one_minus_x(const RatPoly& a);

// The d-th cyclotomic polynomial, exact, via repeated exact division of
// x^d - 1 by the lower cyclotomics. Throws on d == 0. Thread-safe cache.
RatPoly cyclotomic(unsigned long d);

// All rational roots of p (p != 0), each verified by exact evaluation.
std::set<Rat> rational_roots(const RatPoly& p);

// --- conversions ---

// Least positive d with d*p integral, plus the scaled polynomial.
std::pair<Int, IntPoly> clear_denominators(const RatPoly& p);
// Primitive part of the integer scaling of p (content and denominators dropped).
IntPoly primitive_scaling(const RatPoly& p);
RatPoly to_rat_poly(const IntPoly& p);
RatPoly monic(const RatPoly& p);  // p / leading; zero stays zero

// --- bracket text format ---
// "[c0, c1, ...]" low-to-high with exact fractions, e.g. "[1, -3/2, 0, 2]".
// Fractions are normalized on input; zero denominators are rejected.
RatPoly parse_poly(std::string_view text);
std::string poly_to_bracket_string(const RatPoly& p);

}  // namespace kan
