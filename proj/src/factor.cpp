#include "kan/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "kan/family.hpp"

namespace kan {

std::string certificate_name(Certificate c) {
    switch (c) {
        case Certificate::ProvenIrreducibleDegreeSet: return "ProvenIrreducible-DegreeSet";
        case Certificate::ProvenIrreducibleFullFactor: return "ProvenIrreducible-FullFactor";
        case Certificate::FactoredFull: return "Factored-Full";
    }
    return "?";
}

RatPoly FactorDecomposition::remultiply() const {
    RatPoly acc = RatPoly::constant(constant);
    for (const auto& f : factors) {
        RatPoly rp = to_rat_poly(f.poly);
        for (unsigned i = 0; i < f.multiplicity; ++i) acc *= rp;
    }
    return acc;
}

std::vector<long> FactorDecomposition::factor_degrees() const {
    std::vector<long> out;
    for (const auto& f : factors)
        for (unsigned i = 0; i < f.multiplicity; ++i) out.push_back(f.poly.degree());
    std::sort(out.begin(), out.end());
    return out;
}

// ---------- squarefree decomposition over Z (Yun) ----------

namespace {

IntPoly positive_primitive_part(const IntPoly& p) {
    auto [c, prim] = content_primitive(p);
    if (prim.leading() < 0) return -prim;
    return prim;
}

}  // namespace

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition_z(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<IntPoly, unsigned>> out;
    IntPoly f = positive_primitive_part(p);
    if (f.degree() < 1) return out;
    IntPoly fd = derivative(f);
    IntPoly a0 = poly_gcd(f, fd);
    if (a0.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly b = div_exact(f, a0);
    IntPoly c = div_exact(fd, a0);
    IntPoly d = c - derivative(b);
    unsigned i = 1;
    while (b.degree() > 0) {
        IntPoly a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(positive_primitive_part(a), i);
        b = div_exact(b, a);
        c = div_exact(d, a);
        d = c - derivative(b);
        ++i;
    }
    return out;
}

// ---------- degree sets ----------

namespace {

std::vector<char> subset_sum_closure(const std::map<long, long>& degrees, long total) {
    std::vector<char> reach(static_cast<std::size_t>(total) + 1, 0);
    reach[0] = 1;
    for (const auto& [d, count] : degrees)
        for (long rep = 0; rep < count; ++rep)
            for (long s = total - d; s >= 0; --s)
                if (reach[s]) reach[s + d] = 1;
    return reach;
}

void intersect_into(std::vector<char>& acc, const std::vector<char>& other) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] && other[i];
}

bool closure_proves_irreducible(const std::vector<char>& reach) {
    for (std::size_t i = 1; i + 1 < reach.size(); ++i)
        if (reach[i]) return false;
    return true;
}

std::set<long> closure_to_set(const std::vector<char>& reach) {
    std::set<long> out;
    for (std::size_t i = 0; i < reach.size(); ++i)
        if (reach[i]) out.insert(static_cast<long>(i));
    return out;
}

}  // namespace

std::set<long> degree_set_certificate(const IntPoly& p, const std::vector<std::uint64_t>& primes) {
    if (p.degree() < 1) throw std::invalid_argument("degree sets need a nonconstant polynomial");
    const long n = p.degree();
    std::vector<char> acc(static_cast<std::size_t>(n) + 1, 1);
    bool any = false;
    for (std::uint64_t q : primes) {
        std::map<long, long> degrees;
        try {
            degrees = mod_factor_degrees(p, q);
        } catch (const std::exception&) {
            continue;  // bad prime, caller picks the list
        }
        any = true;
        intersect_into(acc, subset_sum_closure(degrees, n));
        if (closure_proves_irreducible(acc)) break;
    }
    if (!any) throw BadPrimeError("all primes bad");
    return closure_to_set(acc);
}

// ---------- Hensel lifting ----------

namespace {

Int mod_sym(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

IntPoly reduce_mod_sym(const IntPoly& f, const Int& m) {
    std::vector<Int> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_sym(f.coeffs()[i], m);
    return IntPoly(std::move(c));
}

IntPoly lift_to_int(const ModPoly& f) {
    std::vector<Int> c;
    c.reserve(f.coeffs().size());
    for (auto v : f.coeffs()) c.emplace_back(static_cast<unsigned long>(v));
    return IntPoly(std::move(c));
}

ModPoly to_mod(const IntPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Int r;
        mpz_mod_ui(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), p);
        c[i] = r.get_ui();
    }
    return ModPoly(p, std::move(c));
}

// Inverse of a modulo m over F_p; both arguments coprime.
ModPoly mod_inverse(const ModPoly& a, const ModPoly& m) {
    ModPoly r0 = m, r1 = a % m;
    ModPoly s0(m.modulus()), s1 = ModPoly::constant(m.modulus(), 1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        ModPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw std::logic_error("modular inverse does not exist");
    // scale so that r0 == 1
    const std::uint64_t p = m.modulus();
    std::uint64_t lead = r0.coeffs()[0];
    std::uint64_t inv = 1, e = p - 2, base = lead % p;
    while (e) {
        if (e & 1) inv = static_cast<std::uint64_t>((static_cast<unsigned __int128>(inv) * base) % p);
        base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % p);
        e >>= 1;
    }
    return s0 * ModPoly::constant(p, inv);
}

// Linear multifactor Hensel lifting: returns monic G_i over Z (coefficients
// in [0, modulus)) with lc(f) * prod G_i == f mod modulus, modulus > target.
struct LiftResult {
    std::vector<IntPoly> factors;
    Int modulus;
};

LiftResult hensel_lift(const IntPoly& f, const std::vector<ModPoly>& gs, std::uint64_t p, const Int& target) {
    const Int b = f.leading();
    const std::size_t r = gs.size();

    // Bezout data mod p: u_i * (b * prod_{j != i} g_j) == 1 (mod g_i).
    std::vector<ModPoly> bezout;
    bezout.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        ModPoly prod = ModPoly::constant(p, 1);
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) prod = (prod * gs[j]) % gs[i];
        prod = (prod * to_mod(IntPoly::constant(b), p)) % gs[i];
        bezout.push_back(mod_inverse(prod, gs[i]));
    }

    std::vector<IntPoly> lifted;
    lifted.reserve(r);
    for (const auto& g : gs) lifted.push_back(lift_to_int(g));

    Int modulus(static_cast<unsigned long>(p));
    const Int pz(static_cast<unsigned long>(p));
    while (modulus <= target) {
        const Int next = modulus * pz;
        IntPoly prod = IntPoly::constant(b);
        for (const auto& g : lifted) prod *= g;
        IntPoly err = f - prod;
        // err == 0 mod modulus by the invariant; divide and reduce mod p.
        std::vector<Int> e_over(err.coeffs().size());
        for (std::size_t i = 0; i < e_over.size(); ++i) {
            Int q;
            mpz_divexact(q.get_mpz_t(), err.coeffs()[i].get_mpz_t(), modulus.get_mpz_t());
            e_over[i] = std::move(q);
        }
        const ModPoly e_mod = to_mod(IntPoly(std::move(e_over)), p);
        for (std::size_t i = 0; i < r; ++i) {
            ModPoly delta = (e_mod * bezout[i]) % gs[i];
            IntPoly bump = lift_to_int(delta);
            bump *= modulus;
            lifted[i] += bump;
        }
        modulus = next;
    }

    // Reduce into [0, modulus); the update keeps factors monic since the
    // corrections have degree below deg g_i.
    for (auto& g : lifted) {
        std::vector<Int> c(g.coeffs().size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = g.coeffs()[i] % modulus;
            if (c[i] < 0) c[i] += modulus;
        }
        g = IntPoly(std::move(c));
    }
    return {std::move(lifted), std::move(modulus)};
}

// Landau-Mignotte style coefficient bound for lc-adjusted divisors of f.
Int mignotte_bound(const IntPoly& f) {
    Int norm2_sq(0);
    for (const auto& c : f.coeffs()) norm2_sq += c * c;
    Int root;
    mpz_sqrt(root.get_mpz_t(), norm2_sq.get_mpz_t());
    root += 1;
    Int lead = f.leading();
    if (lead < 0) lead = -lead;
    return root * int_pow(Int(2), static_cast<unsigned long>(f.degree())) * lead;
}

bool divides_exactly(const IntPoly& num, const IntPoly& den) {
    if (num.degree() < den.degree()) return false;
    try {
        div_exact(num, den);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// Zassenhaus recombination over the lifted factors.
std::vector<IntPoly> recombine(IntPoly f, std::vector<IntPoly> pool, const Int& modulus,
                               const std::vector<char>& degree_ok) {
    std::vector<IntPoly> found;
    bool restart = true;
    while (restart) {
        restart = false;
        const std::size_t r = pool.size();
        if (r == 0) break;
        for (std::size_t take = 1; take <= r / 2 && !restart; ++take) {
            std::vector<std::size_t> idx(take);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                long dsum = 0;
                for (auto i : idx) dsum += pool[i].degree();
                if (degree_ok[static_cast<std::size_t>(dsum)]) {
                    IntPoly cand = IntPoly::constant(f.leading());
                    for (auto i : idx) {
                        cand *= pool[i];
                        cand = reduce_mod_sym(cand, modulus);
                    }
                    cand = positive_primitive_part(cand);
                    if (divides_exactly(f, cand)) {
                        found.push_back(cand);
                        f = div_exact(f, cand);
                        std::vector<IntPoly> rest;
                        for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
                            if (k < idx.size() && idx[k] == i) {
                                ++k;
                                continue;
                            }
                            rest.push_back(std::move(pool[i]));
                        }
                        pool = std::move(rest);
                        restart = true;
                        break;
                    }
                }
                bool advanced = false;
                for (std::size_t i = take; i-- > 0;) {
                    if (idx[i] < i + r - take) {
                        ++idx[i];
                        for (std::size_t j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) break;
            }
        }
    }
    if (f.degree() > 0) found.push_back(positive_primitive_part(f));
    return found;
}

struct PartFactorization {
    std::vector<IntPoly> factors;
    Certificate certificate;
};

// Factor a primitive squarefree nonconstant integer polynomial.
PartFactorization factor_squarefree_primitive(const IntPoly& f, std::mt19937_64& rng) {
    if (f.degree() == 1) return {{f}, Certificate::ProvenIrreducibleDegreeSet};
    const long n = f.degree();

    const auto primes = good_primes(f, 8, static_cast<std::uint64_t>(n));
    std::vector<char> closure(static_cast<std::size_t>(n) + 1, 1);
    std::uint64_t best_prime = 0;
    long best_count = -1;
    for (std::uint64_t p : primes) {
        const auto degrees = mod_factor_degrees(f, p);
        long count = 0;
        for (const auto& [d, c] : degrees) count += c;
        if (best_count < 0 || count < best_count) {
            best_count = count;
            best_prime = p;
        }
        intersect_into(closure, subset_sum_closure(degrees, n));
        if (closure_proves_irreducible(closure))
            return {{f}, Certificate::ProvenIrreducibleDegreeSet};
    }

    auto mod_factors = factor_mod_p(f, best_prime, rng);
    std::vector<ModPoly> gs;
    gs.reserve(mod_factors.size());
    for (auto& mf : mod_factors) gs.push_back(std::move(mf.poly));

    const Int bound = mignotte_bound(f);
    LiftResult lifted = hensel_lift(f, gs, best_prime, 2 * bound);
    auto factors = recombine(f, std::move(lifted.factors), lifted.modulus, closure);
    std::sort(factors.begin(), factors.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    if (factors.size() == 1) return {std::move(factors), Certificate::ProvenIrreducibleFullFactor};
    return {std::move(factors), Certificate::FactoredFull};
}

}  // namespace

// ---------- factorization over Q ----------

FactorDecomposition factor_over_q(const IntPoly& p, std::uint64_t seed) {
    if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    std::mt19937_64 rng(seed);
    FactorDecomposition out;
    auto [content, prim] = content_primitive(p);
    Int sign(1);
    IntPoly body = prim;
    if (body.leading() < 0) {
        sign = -1;
        body = -body;
    }
    out.constant = Rat(sign * content);
    if (body.degree() < 1) {
        out.certificate = Certificate::FactoredFull;
        return out;
    }

    const auto parts = squarefree_decomposition_z(body);
    bool single_part = parts.size() == 1 && parts[0].second == 1;
    Certificate single_cert = Certificate::FactoredFull;
    for (const auto& [part, mult] : parts) {
        auto pf = factor_squarefree_primitive(part, rng);
        if (single_part) single_cert = pf.certificate;
        for (auto& f : pf.factors) out.factors.push_back({std::move(f), mult});
    }
    out.certificate = (single_part && out.factors.size() == 1) ? single_cert : Certificate::FactoredFull;

    std::sort(out.factors.begin(), out.factors.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        return a.poly.coeffs() < b.poly.coeffs();
    });
    if (out.remultiply() != to_rat_poly(p)) throw std::logic_error("factorization failed re-multiplication");
    return out;
}

FactorDecomposition factor_over_q(const RatPoly& p, std::uint64_t seed) {
    if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    auto [den, ip] = clear_denominators(p);
    FactorDecomposition out = factor_over_q(ip, seed);
    out.constant /= Rat(den);
    if (out.remultiply() != p) throw std::logic_error("factorization failed re-multiplication");
    return out;
}

// ---------- irreducibility ----------

IrreducibilityVerdict irreducibility(const IntPoly& p, std::uint64_t seed) {
    if (p.degree() < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
    IrreducibilityVerdict verdict;
    IntPoly body = positive_primitive_part(p);
    if (body.degree() == 1) {
        verdict.irreducible = true;
        verdict.certificate = Certificate::ProvenIrreducibleDegreeSet;
        return verdict;
    }

    // Repeated factors decide immediately.
    if (poly_gcd(body, derivative(body)).degree() > 0) {
        verdict.irreducible = false;
        verdict.decomposition = factor_over_q(p, seed);
        verdict.certificate = Certificate::FactoredFull;
        return verdict;
    }

    // Degree 2, 3: reducible iff a rational root exists.
    if (body.degree() <= 3 && !rational_roots(to_rat_poly(body)).empty()) {
        verdict.irreducible = false;
        verdict.decomposition = factor_over_q(p, seed);
        verdict.certificate = Certificate::FactoredFull;
        return verdict;
    }

    std::mt19937_64 rng(seed);
    auto pf = factor_squarefree_primitive(body, rng);
    if (pf.factors.size() == 1) {
        verdict.irreducible = true;
        verdict.certificate = pf.certificate;
        return verdict;
    }
    verdict.irreducible = false;
    verdict.certificate = Certificate::FactoredFull;
    verdict.decomposition = factor_over_q(p, seed);
    return verdict;
}

IrreducibilityVerdict irreducibility(const RatPoly& p, std::uint64_t seed) {
    if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
    return irreducibility(primitive_scaling(p), seed);
}

// ---------- factor-degree theorem ----------

bool is_squarefree_integer(long n) {
    if (n < 1) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

std::optional<long> prime_square_root(long n) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r != n || r < 2) return std::nullopt;
    for (long d = 2; d * d <= r; ++d)
        if (r % d == 0) return std::nullopt;
    return r;
}

FactorDegreeReport factor_degree_divisibility(long n, std::uint64_t seed) {
    const bool even = n % 2 == 0;
    const bool sf = is_squarefree_integer(n);
    const auto psq = prime_square_root(n);
    if (!even && !sf && !psq) throw std::invalid_argument("hypothesis not met");

    FactorDegreeReport rep;
    rep.n = n;

    // Content of K_{-1,n} (integer coefficients by construction).
    const RatPoly k = build_k(FamilyParams(Rat(-1), n));
    std::vector<Int> kc;
    kc.reserve(k.coeffs().size());
    for (const auto& c : k.coeffs()) kc.push_back(c.get_num());
    rep.content = content_primitive(IntPoly(std::move(kc))).first;
    if (psq) rep.content_divisible_by_p = mpz_divisible_ui_p(rep.content.get_mpz_t(), static_cast<unsigned long>(*psq)) != 0;

    const RatPoly tilde = tilde_k(n);
    if (tilde.degree() < 1) {
        rep.all_divisible_by_6 = true;  // nothing to factor
        return rep;
    }
    const FactorDecomposition dec = factor_over_q(tilde, seed);
    rep.factor_degrees = dec.factor_degrees();
    rep.all_divisible_by_6 = std::all_of(rep.factor_degrees.begin(), rep.factor_degrees.end(),
                                         [](long d) { return d % 6 == 0; });
    return rep;
}

}  // namespace kan
