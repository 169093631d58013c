#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "kan/poly.hpp"

namespace kan {

// Raised when a chosen prime divides the leading coefficient.
struct BadPrimeError : std::runtime_error {
    explicit BadPrimeError(const std::string& what) : std::runtime_error(what) {}
};

// Dense polynomial over F_p, p an odd-or-2 prime below 2^31 so schoolbook
// products can accumulate in 128-bit registers. Residues in [0, p).
class ModPoly {
public:
    explicit ModPoly(std::uint64_t p) : p_(check_modulus(p)) {}
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    static ModPoly from_int_poly(const IntPoly& f, std::uint64_t p);  // throws BadPrimeError
    static ModPoly xpoly(std::uint64_t p);
    static ModPoly constant(std::uint64_t p, std::uint64_t v);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? -1 : static_cast<long>(c_.size()) - 1; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t leading() const { return c_.back(); }

    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool monic() const { return !c_.empty() && c_.back() == 1; }

    ModPoly operator+(const ModPoly& rhs) const;
    ModPoly operator-(const ModPoly& rhs) const;
    ModPoly operator*(const ModPoly& rhs) const;
    bool operator==(const ModPoly& rhs) const { return p_ == rhs.p_ && c_ == rhs.c_; }

    ModPoly make_monic() const;
    ModPoly derivative() const;
    std::uint64_t eval(std::uint64_t x) const;

    friend std::pair<ModPoly, ModPoly> divmod(const ModPoly& num, const ModPoly& den);
    friend ModPoly operator%(const ModPoly& num, const ModPoly& den);
    friend ModPoly mod_gcd(ModPoly a, ModPoly b);  // monic gcd

    // this^e mod f, e arbitrary-precision and nonnegative.
    ModPoly powmod(const Int& e, const ModPoly& f) const;

private:
    static std::uint64_t check_modulus(std::uint64_t p);
    void normalize();
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;  // low-to-high, trailing nonzero
};

struct ModFactor {
    ModPoly poly;  // monic irreducible
    unsigned multiplicity = 1;
};

// Complete factorization into monic irreducibles over F_p (squarefree split,
// distinct-degree, then Cantor-Zassenhaus equal-degree splitting; Las Vegas).
// The unit lc(f) mod p is not included in the factors.
std::vector<ModFactor> factor_mod_p(const IntPoly& f, std::uint64_t p, std::mt19937_64& rng);

// Degrees (with multiplicity) of the irreducible factors of the image of f,
// via distinct-degree factorization only. Requires a squarefree image.
std::map<long, long> mod_factor_degrees(const IntPoly& f, std::uint64_t p);

// Image of f is squarefree, i.e. gcd(f mod p, f' mod p) = 1.
bool squarefree_mod_p(const IntPoly& f, std::uint64_t p);

// Primes in ascending order starting above `above`, filtered to those that
// neither divide lc(f) nor break squarefreeness of the image. Throws
// BadPrimeError if the supply of candidate primes below 2^31 runs dry.
std::vector<std::uint64_t> good_primes(const IntPoly& f, std::size_t count, std::uint64_t above);

}  // namespace kan
