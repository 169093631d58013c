#include <doctest.h>

#include <random>

#include "kan/family.hpp"
#include "kan/modp.hpp"

using namespace kan;

namespace {

// Exhaustive trial-division oracle over F_p, ascending candidate degree.
std::vector<std::pair<ModPoly, unsigned>> oracle_factor(const ModPoly& input) {
    const std::uint64_t p = input.modulus();
    std::vector<std::pair<ModPoly, unsigned>> out;
    ModPoly f = input.make_monic();
    long d = 1;
    while (f.degree() > 0) {
        if (2 * d > f.degree()) {
            out.emplace_back(f, 1u);
            break;
        }
        bool found = false;
        std::uint64_t combos = 1;
        for (long i = 0; i < d; ++i) combos *= p;
        for (std::uint64_t code = 0; code < combos && !found; ++code) {
            std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
            c[static_cast<std::size_t>(d)] = 1;
            std::uint64_t rest = code;
            for (long i = 0; i < d; ++i) {
                c[static_cast<std::size_t>(i)] = rest % p;
                rest /= p;
            }
            const ModPoly cand(p, c);
            unsigned mult = 0;
            while (true) {
                auto [q, r] = divmod(f, cand);
                if (!r.is_zero()) break;
                f = q;
                ++mult;
            }
            if (mult) {
                out.emplace_back(cand, mult);
                found = true;
            }
        }
        if (!found) ++d;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

bool same_factorization(const std::vector<ModFactor>& got, const std::vector<std::pair<ModPoly, unsigned>>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (!(got[i].poly == want[i].first && got[i].multiplicity == want[i].second)) return false;
    return true;
}

IntPoly int_poly_of(const RatPoly& p) {
    std::vector<Int> c;
    for (const auto& v : p.coeffs()) {
        REQUIRE(v.get_den() == 1);
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

}  // namespace

TEST_SUITE_BEGIN("modp");

TEST_CASE("x^2+1 splits mod 5") {
    std::mt19937_64 rng(1);
    const auto factors = factor_mod_p(IntPoly{Int(1), Int(0), Int(1)}, 5, rng);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].poly == ModPoly(5, {2, 1}));
    CHECK(factors[1].poly == ModPoly(5, {3, 1}));
}

TEST_CASE("x^2-x+1 mod 7 has the brute-force roots 3 and 5") {
    const IntPoly f{Int(1), Int(-1), Int(1)};
    const ModPoly image = ModPoly::from_int_poly(f, 7);
    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 0; x < 7; ++x)
        if (image.eval(x) == 0) roots.push_back(x);
    CHECK(roots == std::vector<std::uint64_t>{3, 5});

    std::mt19937_64 rng(2);
    const auto factors = factor_mod_p(f, 7, rng);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].poly == ModPoly(7, {2, 1}));  // x - 5
    CHECK(factors[1].poly == ModPoly(7, {4, 1}));  // x - 3
}

TEST_CASE("K(-1,6) mod 5 agrees with exhaustive trial division") {
    const IntPoly k6 = int_poly_of(build_k(FamilyParams(Rat(-1), 6)));
    std::mt19937_64 rng(3);
    const auto got = factor_mod_p(k6, 5, rng);
    const auto want = oracle_factor(ModPoly::from_int_poly(k6, 5));
    CHECK(same_factorization(got, want));
}

TEST_CASE("product check across random inputs and primes") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> deg(1, 7), coeff(-30, 30);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        for (int t = 0; t < 15; ++t) {
            std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& v : c) v = Int(coeff(rng));
            IntPoly f(c);
            if (f.is_zero() || f.degree() < 1) continue;
            Int lead_mod;
            mpz_mod_ui(lead_mod.get_mpz_t(), f.leading().get_mpz_t(), p);
            if (lead_mod == 0) continue;
            std::mt19937_64 cz(static_cast<std::uint64_t>(t) * 100 + p);
            const auto factors = factor_mod_p(f, p, cz);
            ModPoly product = ModPoly::constant(p, ModPoly::from_int_poly(f, p).leading());
            for (const auto& fac : factors) {
                CHECK(fac.poly.monic());
                for (unsigned i = 0; i < fac.multiplicity; ++i) product = product * fac.poly;
            }
            CHECK(product == ModPoly::from_int_poly(f, p));
        }
    }
}

TEST_CASE("multiplicities in characteristic p") {
    // (x+1)^2 (x^2+x+1) over F_5
    const IntPoly f = IntPoly{Int(1), Int(1)} * IntPoly{Int(1), Int(1)} * IntPoly{Int(1), Int(1), Int(1)};
    std::mt19937_64 rng(5);
    const auto got = factor_mod_p(f, 5, rng);
    const auto want = oracle_factor(ModPoly::from_int_poly(f, 5));
    CHECK(same_factorization(got, want));

    // p-th power: (x+2)^5 over F_5 exercises the p-th root path
    IntPoly g = IntPoly::constant(1);
    for (int i = 0; i < 5; ++i) g *= IntPoly{Int(2), Int(1)};
    std::mt19937_64 rng2(6);
    const auto got2 = factor_mod_p(g, 5, rng2);
    REQUIRE(got2.size() == 1);
    CHECK(got2[0].multiplicity == 5);
    CHECK(got2[0].poly == ModPoly(5, {2, 1}));
}

TEST_CASE("characteristic 2 equal-degree splitting") {
    std::mt19937_64 rng(7);
    // x^4+x+1 is irreducible over F_2; (x^2+x+1)(x^3+x+1) is not
    const auto f1 = factor_mod_p(IntPoly{Int(1), Int(1), Int(0), Int(0), Int(1)}, 2, rng);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].poly.degree() == 4);
    const IntPoly f2 = IntPoly{Int(1), Int(1), Int(1)} * IntPoly{Int(1), Int(1), Int(0), Int(1)};
    const auto got = factor_mod_p(f2, 2, rng);
    const auto want = oracle_factor(ModPoly::from_int_poly(f2, 2));
    CHECK(same_factorization(got, want));
}

TEST_CASE("bad prime is rejected") {
    std::mt19937_64 rng(8);
    CHECK_THROWS_AS(factor_mod_p(IntPoly{Int(1), Int(5)}, 5, rng), BadPrimeError);
}

TEST_CASE("degree multisets need a squarefree image") {
    const IntPoly sq = IntPoly{Int(1), Int(1)} * IntPoly{Int(1), Int(1)};
    CHECK_THROWS_AS(mod_factor_degrees(sq, 5), std::invalid_argument);
    const auto degrees = mod_factor_degrees(IntPoly{Int(1), Int(0), Int(1)}, 5);
    CHECK(degrees == std::map<long, long>{{1, 2}});
}

TEST_CASE("degree multiset sums to the degree") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> deg(2, 9), coeff(-20, 20);
    for (int t = 0; t < 20; ++t) {
        std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : c) v = Int(coeff(rng));
        IntPoly f(c);
        if (f.degree() < 2) continue;
        const auto primes = [&]() -> std::vector<std::uint64_t> {
            try {
                return good_primes(f, 1, static_cast<std::uint64_t>(f.degree()));
            } catch (const BadPrimeError&) {
                return {};
            }
        }();
        if (primes.empty()) continue;  // not squarefree over Z
        const auto degrees = mod_factor_degrees(f, primes[0]);
        long total = 0;
        for (const auto& [d, count] : degrees) total += d * count;
        CHECK(total == f.degree());
    }
}

TEST_SUITE_END();
