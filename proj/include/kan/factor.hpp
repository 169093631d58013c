#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kan/modp.hpp"
#include "kan/poly.hpp"

namespace kan {

enum class Certificate {
    ProvenIrreducibleDegreeSet,
    ProvenIrreducibleFullFactor,
    FactoredFull,
};

std::string certificate_name(Certificate c);

struct IrreducibleFactor {
    IntPoly poly;            // primitive, positive leading coefficient
    unsigned multiplicity = 1;
};

// constant * prod(factors^multiplicity) reproduces the input exactly;
// every construction site re-multiplies and checks.
struct FactorDecomposition {
    Rat constant = Rat(1);
    std::vector<IrreducibleFactor> factors;
    Certificate certificate = Certificate::FactoredFull;

    RatPoly remultiply() const;
    std::vector<long> factor_degrees() const;
    bool is_irreducible_shape() const {  // one factor, multiplicity one
        return factors.size() == 1 && factors[0].multiplicity == 1;
    }
};

// Subset-sum closure of the mod-p factor degrees, intersected over the given
// primes (bad primes are skipped; throws BadPrimeError if none is usable).
// Result {0, deg P} certifies irreducibility. Requires P squarefree.
std::set<long> degree_set_certificate(const IntPoly& p, const std::vector<std::uint64_t>& primes);

// Complete factorization over Q: Yun squarefree split, then per part either a
// degree-set certificate or Hensel lifting with Zassenhaus recombination.
// Deterministic given the seed (the equal-degree splitting is Las Vegas).
FactorDecomposition factor_over_q(const IntPoly& p, std::uint64_t seed = 2);
FactorDecomposition factor_over_q(const RatPoly& p, std::uint64_t seed = 2);

struct IrreducibilityVerdict {
    bool irreducible = false;
    Certificate certificate = Certificate::ProvenIrreducibleDegreeSet;
    std::optional<FactorDecomposition> decomposition;  // present when reducible
};

// Definitive verdict; tries cheap certificates first (rational-root exclusion
// for degree <= 3, degree sets), falls back to full factorization.
IrreducibilityVerdict irreducibility(const IntPoly& p, std::uint64_t seed = 2);
IrreducibilityVerdict irreducibility(const RatPoly& p, std::uint64_t seed = 2);

// Yun's squarefree decomposition over Z (characteristic zero), primitive parts.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition_z(const IntPoly& p);

struct FactorDegreeReport {
    long n = 0;
    Int content;                    // content of K_{-1,n}
    std::vector<long> factor_degrees;
    bool all_divisible_by_6 = false;
    bool content_divisible_by_p = false;  // meaningful when n = prime^2
};

// Factors tilde-K_n for n even, squarefree, or the square of a prime, and
// checks that every irreducible factor degree is divisible by 6. Throws
// std::invalid_argument("hypothesis not met") otherwise.
FactorDegreeReport factor_degree_divisibility(long n, std::uint64_t seed = 2);

// n is squarefree / a prime square (trial division; n is desk-scale here).
bool is_squarefree_integer(long n);
std::optional<long> prime_square_root(long n);

}  // namespace kan
