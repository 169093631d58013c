#include <doctest.h>

#include <random>

#include "kan/factor.hpp"
#include "kan/family.hpp"

using namespace kan;

namespace {

IntPoly int_poly_of(const RatPoly& p) {
    std::vector<Int> c;
    for (const auto& v : p.coeffs()) {
        REQUIRE(v.get_den() == 1);
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

// No root of f modulo p (brute scan); with deg <= 3 this certifies no linear
// factor mod p.
bool no_root_mod(const IntPoly& f, std::uint64_t p) {
    const ModPoly image = ModPoly::from_int_poly(f, p);
    for (std::uint64_t x = 0; x < p; ++x)
        if (image.eval(x) == 0) return false;
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("factor");

TEST_CASE("degree-set certificates") {
    const IntPoly omega{Int(1), Int(-1), Int(1)};
    // Brute-force splitting oracle: no roots mod 5 or 11, so both images are
    // irreducible quadratics and the closure is {0, 2}.
    CHECK(no_root_mod(omega, 5));
    CHECK(no_root_mod(omega, 11));
    CHECK(degree_set_certificate(omega, {5, 11}) == std::set<long>{0, 2});

    const IntPoly x2p1{Int(1), Int(0), Int(1)};
    CHECK(no_root_mod(x2p1, 7));
    CHECK(degree_set_certificate(x2p1, {7}) == std::set<long>{0, 2});

    // L for a = 1/2, n = 4: 2x^4 - 8x^3 + 24x^2 - 32x + 17
    const IntPoly l = build_l_half(FamilyParams(Rat(1, 2), 4));
    CHECK(l == IntPoly{Int(17), Int(-32), Int(24), Int(-8), Int(2)});
    const auto primes = good_primes(l, 10, static_cast<std::uint64_t>(l.degree()));
    CHECK(degree_set_certificate(l, primes) == std::set<long>{0, 4});

    CHECK_THROWS_AS(degree_set_certificate(omega, std::vector<std::uint64_t>{}), BadPrimeError);
}

TEST_CASE("full factorization over Q") {
    const auto dec6 = factor_over_q(int_poly_of(build_k(FamilyParams(Rat(-1), 6))));
    CHECK(dec6.is_irreducible_shape());
    CHECK(dec6.remultiply() == build_k(FamilyParams(Rat(-1), 6)));

    const IntPoly a{Int(1), Int(-1), Int(1)};
    const IntPoly b{Int(1), Int(-2), Int(2)};
    const auto dec_ab = factor_over_q(a * b);
    REQUIRE(dec_ab.factors.size() == 2);
    CHECK(dec_ab.constant == 1);
    // sorted by degree, then coefficient vector
    CHECK(dec_ab.factors[0].poly == b);
    CHECK(dec_ab.factors[1].poly == a);

    const auto dec13 = factor_over_q(build_k(FamilyParams(Rat(-1), 13)));
    REQUIRE(dec13.factors.size() == 4);
    CHECK(dec13.constant == 13);  // the content of K: 13 divides every binomial coefficient
    CHECK(dec13.factors[0].poly == IntPoly{Int(-1), Int(1)});
    CHECK(dec13.factors[0].multiplicity == 1);
    CHECK(dec13.factors[1].poly == IntPoly{Int(0), Int(1)});
    CHECK(dec13.factors[2].poly == a);
    CHECK(dec13.factors[2].multiplicity == 2);
    CHECK(dec13.factors[3].poly.degree() == 6);
    CHECK(dec13.remultiply() == build_k(FamilyParams(Rat(-1), 13)));
}

TEST_CASE("irreducibility verdicts") {
    CHECK(irreducibility(build_k(FamilyParams(Rat(2, 5), 7))).irreducible);

    const auto v = irreducibility(IntPoly{Int(-1), Int(0), Int(1)});
    CHECK_FALSE(v.irreducible);
    REQUIRE(v.decomposition.has_value());
    REQUIRE(v.decomposition->factors.size() == 2);
    CHECK(v.decomposition->factors[0].poly == IntPoly{Int(-1), Int(1)});
    CHECK(v.decomposition->factors[1].poly == IntPoly{Int(1), Int(1)});

    CHECK(irreducibility(to_rat_poly(build_l_half(FamilyParams(Rat(1, 2), 10)))).irreducible);
    CHECK_THROWS_AS(irreducibility(IntPoly::constant(3)), std::invalid_argument);
}

TEST_CASE("squarefree decomposition over Z") {
    const IntPoly p1{Int(1), Int(1)};
    const IntPoly p2{Int(-2), Int(1)};
    IntPoly f = IntPoly::constant(1);
    for (int i = 0; i < 2; ++i) f *= p1;
    for (int i = 0; i < 3; ++i) f *= p2;
    const auto parts = squarefree_decomposition_z(f);
    REQUIRE(parts.size() == 2);
    CHECK(((parts[0].first == p1 && parts[0].second == 2) || (parts[1].first == p1 && parts[1].second == 2)));
    CHECK(((parts[0].first == p2 && parts[0].second == 3) || (parts[1].first == p2 && parts[1].second == 3)));
}

TEST_CASE("remultiplication and degree-set agreement on random products") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> deg(1, 4), coeff(-8, 8), count(1, 3);
    for (int t = 0; t < 25; ++t) {
        IntPoly product = IntPoly::constant(1);
        const int k = count(rng);
        for (int i = 0; i < k; ++i) {
            std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& v : c) v = Int(coeff(rng));
            IntPoly f(c);
            if (f.is_zero()) f = IntPoly{Int(1), Int(1)};
            product *= f;
        }
        if (product.degree() < 1) continue;
        const auto dec = factor_over_q(product, 100 + static_cast<std::uint64_t>(t));
        CHECK(dec.remultiply() == to_rat_poly(product));
        // degree sets never contradict the full factorization
        const IntPoly prim = content_primitive(product).second;
        const auto sf = squarefree_decomposition_z(prim);
        if (sf.size() == 1 && sf[0].second == 1 && sf[0].first.degree() >= 2) {
            const auto primes = good_primes(sf[0].first, 8, static_cast<std::uint64_t>(sf[0].first.degree()));
            const auto ds = degree_set_certificate(sf[0].first, primes);
            if (ds == std::set<long>{0, sf[0].first.degree()}) CHECK(dec.is_irreducible_shape());
        }
    }
}

TEST_CASE("factor-degree theorem spot checks") {
    const auto r6 = factor_degree_divisibility(6);
    CHECK(r6.all_divisible_by_6);
    CHECK(r6.factor_degrees == std::vector<long>{6});

    const auto r9 = factor_degree_divisibility(9);
    CHECK(r9.all_divisible_by_6);
    CHECK(r9.content % 3 == 0);
    CHECK(r9.content_divisible_by_p);

    const auto r12 = factor_degree_divisibility(12);
    CHECK(r12.all_divisible_by_6);

    CHECK_THROWS_WITH_AS(factor_degree_divisibility(27), "hypothesis not met", std::invalid_argument);
}

TEST_CASE("integer qualification helpers") {
    CHECK(is_squarefree_integer(30));
    CHECK_FALSE(is_squarefree_integer(12));
    CHECK(prime_square_root(49) == 49 / 7);
    CHECK_FALSE(prime_square_root(36).has_value());
    CHECK_FALSE(prime_square_root(27).has_value());
}

TEST_SUITE_END();
