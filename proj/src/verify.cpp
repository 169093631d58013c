#include "kan/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "kan/curves.hpp"
#include "kan/factor.hpp"
#include "kan/family.hpp"
#include "kan/parallel.hpp"
#include "kan/poly.hpp"
#include "kan/roots.hpp"
#include "kan/scan.hpp"
#include "kan/theta.hpp"

namespace kan {

namespace {

// Thread-safe failure collector keeping the first few messages.
class Failures {
public:
    void add(const std::string& msg) {
        std::lock_guard<std::mutex> lock(mutex_);
        ++count_;
        if (messages_.size() < 6) messages_.push_back(msg);
    }
    bool empty() const { return count_ == 0; }
    long count() const { return count_; }
    std::string summary() const {
        std::ostringstream out;
        out << count_ << " failure(s)";
        for (const auto& m : messages_) out << "; " << m;
        return out.str();
    }

private:
    mutable std::mutex mutex_;
    long count_ = 0;
    std::vector<std::string> messages_;
};

unsigned thread_count(const VerifyOptions& opts) {
    return opts.threads ? opts.threads : default_thread_count();
}

long range_max(const VerifyOptions& opts, long fallback) { return opts.nmax.value_or(fallback); }

std::string rat_str(const Rat& a) { return rat_to_string(a); }

// --- criterion 1: scaled conjecture scan ---

CriterionResult criterion_conjecture_scan(const VerifyOptions& opts) {
    CriterionResult res{1, "conjecture-scan", false, "", 0};
    const auto grid = scan_grid({20, 20, range_max(opts, 30)});
    Failures fails;
    std::atomic<long> checked(0), skipped(0);
    parallel_for(0, static_cast<long>(grid.size()), thread_count(opts), [&](long i) {
        const auto& [a, n] = grid[static_cast<std::size_t>(i)];
        const ScanRecord rec = evaluate_grid_point(a, n, opts.seed);
        if (rec.verdict == "skipped-trivial") {
            if (!(a == -1 || (a == 1 && n % 2 == 0)))
                fails.add("unexpected skip at a=" + rat_str(a) + ", n=" + std::to_string(n));
            ++skipped;
            return;
        }
        ++checked;
        if (rec.verdict != "irreducible")
            fails.add("reducible at a=" + rat_str(a) + ", n=" + std::to_string(n));
    });
    res.pass = fails.empty();
    std::ostringstream detail;
    detail << checked.load() << " grid points irreducible, " << skipped.load() << " skipped as the a=-1 family";
    res.detail = res.pass ? detail.str() : fails.summary();
    return res;
}

// --- criterion 2: tilde irreducibility ---

CriterionResult criterion_tilde_irreducible(const VerifyOptions& opts) {
    CriterionResult res{2, "tilde-irreducible", false, "", 0};
    const long nmax = range_max(opts, 200);
    Failures fails;
    std::atomic<long> nontrivial(0);
    parallel_for(2, nmax + 1, thread_count(opts), [&](long n) {
        const RatPoly tilde = tilde_k(n);
        if (tilde_degree_formula(n) == 0) {
            if (!tilde.is_constant()) fails.add("expected constant tilde at n=" + std::to_string(n));
            return;
        }
        ++nontrivial;
        if (!irreducibility(tilde, opts.seed).irreducible)
            fails.add("tilde reducible at n=" + std::to_string(n));
    });
    res.pass = fails.empty();
    res.detail = res.pass
        ? std::to_string(nontrivial.load()) + " nonconstant tilde polynomials irreducible up to n=" + std::to_string(nmax)
        : fails.summary();
    return res;
}

// --- criterion 3: localization for a = -1 ---

CriterionResult criterion_localization_minus_one(const VerifyOptions& opts) {
    CriterionResult res{3, "localization-minus-one", false, "", 0};
    const long nmax = range_max(opts, 100);
    const PrecisionPolicy policy;
    Failures fails;
    std::atomic<long> verified_roots(0);
    parallel_for(2, nmax + 1, thread_count(opts), [&](long n) {
        const long dn = tilde_degree_formula(n);
        if (dn == 0) return;
        const RatPoly tilde = tilde_k(n);
        const RootCloud cloud = all_roots(tilde, policy);
        if (!cloud.certified) {
            fails.add("residuals not certified at n=" + std::to_string(n));
            return;
        }
        const Classification cls = classify_roots(cloud, CurveFamily::three_curve(), policy.curve_tol);
        if (cls.failures != 0) {
            fails.add("localization failure at n=" + std::to_string(n));
            return;
        }
        for (double count : cls.piece_counts)
            if (count != static_cast<double>(dn / 3))
                fails.add("piece count != d_n/3 at n=" + std::to_string(n));
        verified_roots += dn;
    });
    res.pass = fails.empty();
    res.detail = res.pass ? std::to_string(verified_roots.load()) + " roots on the three-curve union within 1e-20"
                          : fails.summary();
    return res;
}

// --- criterion 4: localization for |a| <= 1/2 and theta agreement ---

CriterionResult criterion_localization_line(const VerifyOptions& opts) {
    CriterionResult res{4, "localization-line", false, "", 0};
    const long nmax = range_max(opts, 100);
    const PrecisionPolicy policy;
    const std::vector<Rat> as = {Rat(1, 2), Rat(-1, 2), Rat(1, 3), Rat(-2, 5)};
    Failures fails;
    std::atomic<long> verified(0);
    for (const Rat& a : as) {
        parallel_for(2, nmax + 1, thread_count(opts), [&](long n) {
            const RatPoly k = build_k(FamilyParams(a, n));
            const RootCloud cloud = all_roots(k, policy);
            const Classification cls = classify_roots(cloud, CurveFamily::line(), policy.curve_tol);
            if (!cloud.certified || cls.failures != 0) {
                fails.add("line localization failed at a=" + rat_str(a) + ", n=" + std::to_string(n));
                return;
            }
            if (static_cast<long>(cloud.points.size()) != 2 * (n / 2)) {
                fails.add("root count != 2*floor(n/2) at a=" + rat_str(a) + ", n=" + std::to_string(n));
                return;
            }
            // theta-solver multiset (with conjugates) must match the general solver.
            const auto troots = theta_roots(a, n, policy);
            std::vector<BigComplex> expected;
            for (const auto& tr : troots) {
                expected.push_back(tr.mapped_x);
                expected.push_back(tr.mapped_x.conj());
            }
            if (expected.size() != cloud.points.size()) {
                fails.add("theta count mismatch at a=" + rat_str(a) + ", n=" + std::to_string(n));
                return;
            }
            auto by_im = [](const BigComplex& l, const BigComplex& r) { return l.im < r.im; };
            std::vector<BigComplex> got = cloud.points;
            std::sort(got.begin(), got.end(), by_im);
            std::sort(expected.begin(), expected.end(), by_im);
            const BigFloat tol = BigFloat::from_double(policy.curve_tol, cloud.prec);
            for (std::size_t i = 0; i < got.size(); ++i) {
                if (!(abs(got[i] - expected[i]) <= tol)) {
                    fails.add("theta/general root mismatch at a=" + rat_str(a) + ", n=" + std::to_string(n));
                    return;
                }
            }
            verified += static_cast<long>(got.size());
        });
    }
    res.pass = fails.empty();
    res.detail = res.pass ? std::to_string(verified.load()) + " roots on Re x = 1/2, two solvers agreeing"
                          : fails.summary();
    return res;
}

// --- criterion 5: theorem-1 bound and interval coverage ---

CriterionResult criterion_theorem1_bound(const VerifyOptions& opts) {
    CriterionResult res{5, "theorem1-bound", false, "", 0};
    const long nmax = range_max(opts, 60);
    const PrecisionPolicy policy;
    const std::vector<Rat> as = {Rat(-1), Rat(2), Rat(-3, 2), Rat(5)};
    Failures fails;
    for (const Rat& a : as) {
        parallel_for(2, nmax + 1, thread_count(opts), [&](long n) {
            const long bound = theorem1_bound(a, n);
            const RatPoly k = build_k(FamilyParams(a, n));
            const RootCloud cloud = all_roots(k, policy);
            // Im of the ray base point A: sqrt(max(1/4, a^2) - 1/4).
            const mpfr_prec_t prec = cloud.prec;
            Rat a2 = a * a;
            if (a2 < Rat(1, 4)) a2 = Rat(1, 4);
            const BigFloat im_a = sqrt(BigFloat::from_rat(a2 - Rat(1, 4), prec));
            const BigFloat tol = BigFloat::from_double(policy.curve_tol, prec);
            const BigFloat half = BigFloat::from_double(0.5, prec);
            long on_ray = 0;
            for (const auto& z : cloud.points)
                if (abs(z.re - half) <= tol && z.im >= im_a - tol) ++on_ray;
            if (on_ray < bound)
                fails.add("on-ray count " + std::to_string(on_ray) + " < bound " + std::to_string(bound) +
                          " at a=" + rat_str(a) + ", n=" + std::to_string(n));
            // Density proxy: one zero per grid interval inside the domain.
            const auto troots = theta_roots(a, n, policy);
            if (static_cast<long>(troots.size()) != std::max(0L, bound))
                fails.add("interval coverage mismatch at a=" + rat_str(a) + ", n=" + std::to_string(n));
        });
    }
    res.pass = fails.empty();
    res.detail = res.pass ? "certified on-ray counts dominate the bound for all four parameters" : fails.summary();
    return res;
}

// --- criterion 6: square-freeness ---

CriterionResult criterion_squarefree(const VerifyOptions& opts) {
    CriterionResult res{6, "squarefree", false, "", 0};
    Failures fails;

    // 200 pseudorandom (a, n), a = +-p/q != +-1, p,q <= 50, n <= 60.
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> pq(1, 50), nn(2, 60), coin(0, 1);
    std::vector<std::pair<Rat, long>> samples;
    while (samples.size() < 200) {
        const long p = pq(rng), q = pq(rng);
        if (std::gcd(p, q) != 1) continue;
        Rat a = make_rat(coin(rng) ? p : -p, q);
        if (a == 1 || a == -1) continue;
        samples.emplace_back(std::move(a), nn(rng));
    }
    parallel_for(0, static_cast<long>(samples.size()), thread_count(opts), [&](long i) {
        const auto& [a, n] = samples[static_cast<std::size_t>(i)];
        if (!squarefree_check(FamilyParams(a, n)).squarefree)
            fails.add("not squarefree at a=" + rat_str(a) + ", n=" + std::to_string(n));
    });

    // a = 1, odd n <= 99.
    parallel_for(0, 49, thread_count(opts), [&](long i) {
        const long n = 2 * i + 3;
        if (!squarefree_check(FamilyParams(Rat(1), n)).squarefree)
            fails.add("K(1,n) not squarefree at odd n=" + std::to_string(n));
    });

    // a = -1: gcd(K, K') is x^2-x+1 exactly when the sixth root of unity is a
    // double root (n = 1 mod 3), and 1 otherwise.
    const RatPoly omega_factor{Rat(1), Rat(-1), Rat(1)};
    parallel_for(2, 201, thread_count(opts), [&](long n) {
        const RatPoly k = build_k(FamilyParams(Rat(-1), n));
        const RatPoly g = poly_gcd(k, derivative(k));
        const RatPoly expected = (n % 3 == 1) ? omega_factor : RatPoly::constant(Rat(1));
        if (g != expected) fails.add("gcd mismatch at n=" + std::to_string(n));
    });

    res.pass = fails.empty();
    res.detail = res.pass ? "200 random (a,n), odd-n a=1, and the a=-1 multiplicity table all verified"
                          : fails.summary();
    return res;
}

// --- criterion 7: omega case table ---

CriterionResult criterion_omega_table(const VerifyOptions& opts) {
    CriterionResult res{7, "omega-table", false, "", 0};
    const long nmax = range_max(opts, 600);
    Failures fails;
    parallel_for(2, nmax + 1, thread_count(opts), [&](long n) {
        if (!verify_omega_table(n).matches_case_table) fails.add("case table mismatch at n=" + std::to_string(n));
    });
    res.pass = fails.empty();
    res.detail = res.pass ? "exact ring evaluation matches the case table for 2 <= n <= " + std::to_string(nmax)
                          : fails.summary();
    return res;
}

// --- criterion 8: d_n identities ---

CriterionResult criterion_dn_identities(const VerifyOptions& opts) {
    CriterionResult res{8, "dn-identities", false, "", 0};
    Failures fails;
    for (long n = 2; n <= 10000; ++n) {
        const long dn = tilde_degree_formula(n);
        if (dn % 6 != 0) fails.add("d_n not divisible by 6 at n=" + std::to_string(n));
        const long lhs = n / 2 - (n + 2) / 3;  // floor(n/2) - ceil(n/3)
        if (lhs != dn / 6) fails.add("floor/ceil identity fails at n=" + std::to_string(n));
    }
    parallel_for(2, 201, thread_count(opts), [&](long n) {
        if (tilde_k(n).degree() != std::max(0L, tilde_degree_formula(n)) &&
            !(tilde_degree_formula(n) == 0 && tilde_k(n).is_constant()))
            fails.add("deg tilde != d_n at n=" + std::to_string(n));
    });
    res.pass = fails.empty();
    res.detail = res.pass ? "formula checks to n=10^4 and exact division checks to n=200" : fails.summary();
    return res;
}

// --- criterion 9: factor-degree theorem ---

CriterionResult criterion_factor_degrees(const VerifyOptions& opts) {
    CriterionResult res{9, "factor-degrees", false, "", 0};
    const long nmax = range_max(opts, 120);
    Failures fails;
    std::vector<long> qualifying;
    for (long n = 2; n <= nmax; ++n)
        if (n % 2 == 0 || is_squarefree_integer(n) || prime_square_root(n)) qualifying.push_back(n);
    parallel_for(0, static_cast<long>(qualifying.size()), thread_count(opts), [&](long i) {
        const long n = qualifying[static_cast<std::size_t>(i)];
        const FactorDegreeReport rep = factor_degree_divisibility(n, opts.seed);
        if (!rep.all_divisible_by_6) fails.add("factor degree not divisible by 6 at n=" + std::to_string(n));
        if (prime_square_root(n) && n <= 49 && !rep.content_divisible_by_p)
            fails.add("content not divisible by p at n=" + std::to_string(n));
    });
    // The hypothesis gate must reject odd, non-squarefree, non-prime-square n.
    try {
        factor_degree_divisibility(27, opts.seed);
        fails.add("n=27 accepted despite failing the hypothesis");
    } catch (const std::invalid_argument&) {
    }
    res.pass = fails.empty();
    res.detail = res.pass ? std::to_string(qualifying.size()) + " qualifying n checked up to " + std::to_string(nmax)
                          : fails.summary();
    return res;
}

// --- criterion 10: cyclotomic identities ---

long totient(long d) {
    long result = d, m = d;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

CriterionResult criterion_cyclotomic(const VerifyOptions& opts) {
    CriterionResult res{10, "cyclotomic-identities", false, "", 0};
    Failures fails;
    const RatPoly one_minus_x{Rat(1), Rat(-1)};
    parallel_for(2, 51, thread_count(opts), [&](long n) {
        RatPoly product = RatPoly::constant(Rat(1));
        for (long d = 1; d <= n - 1; ++d)
            if ((n - 1) % d == 0) product *= homogenize_at_one_minus_x(cyclotomic(static_cast<unsigned long>(d)));
        RatPoly rhs = RatPoly::monomial(static_cast<std::size_t>(n - 1));
        RatPoly pw = RatPoly::constant(Rat(1));
        for (long i = 0; i < n - 1; ++i) pw *= one_minus_x;
        rhs -= pw;
        if (product != rhs) fails.add("product identity fails at n=" + std::to_string(n));
    });
    parallel_for(3, 31, thread_count(opts), [&](long d) {
        const RatPoly h = homogenize_at_one_minus_x(cyclotomic(static_cast<unsigned long>(d)));
        if (h.degree() != totient(d)) fails.add("deg != phi(d) at d=" + std::to_string(d));
        if (!irreducibility(h, opts.seed).irreducible) fails.add("homogenized cyclotomic reducible at d=" + std::to_string(d));
    });
    res.pass = fails.empty();
    res.detail = res.pass ? "product identity to n=50; homogenized cyclotomics irreducible for d=3..30" : fails.summary();
    return res;
}

// --- criterion 11: oracle equivalence ---

// Eisenstein-at-p construction: irreducible by theorem, independent of the
// factorization engine under test.
IntPoly random_known_irreducible(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick_deg(1, 8), small(1, 9), signed9(-9, 9), unit(1, 3), coin(0, 1);
    const int degree = pick_deg(rng);
    if (degree == 1) {
        long b = signed9(rng);
        long a = small(rng);
        while (std::gcd(a, std::abs(b)) != 1) {
            a = small(rng);
            b = signed9(rng);
        }
        return IntPoly{Int(b), Int(a)};
    }
    const long primes[3] = {2, 3, 5};
    const long p = primes[static_cast<std::size_t>(rng() % 3)];
    std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
    long lead = small(rng);
    while (lead % p == 0) lead = small(rng);
    c[static_cast<std::size_t>(degree)] = lead;
    for (int i = 1; i < degree; ++i) c[static_cast<std::size_t>(i)] = Int(p * signed9(rng));
    long u = unit(rng) * (coin(rng) ? 1 : -1);
    while (u % p == 0) u = unit(rng) * (coin(rng) ? 1 : -1);
    c[0] = Int(p * u);
    return IntPoly(std::move(c));
}

// Exhaustive factorization over F_p by trial division with ascending degree.
std::vector<std::pair<ModPoly, unsigned>> exhaustive_factor_mod_p(const ModPoly& input) {
    const std::uint64_t p = input.modulus();
    std::vector<std::pair<ModPoly, unsigned>> out;
    ModPoly f = input.make_monic();
    long d = 1;
    while (f.degree() > 0) {
        if (2 * d > f.degree()) {
            out.emplace_back(f, 1);
            break;
        }
        bool found = false;
        // all monic candidates of degree d
        std::vector<std::uint64_t> c(static_cast<std::size_t>(d) + 1, 0);
        c[static_cast<std::size_t>(d)] = 1;
        const std::uint64_t combos = static_cast<std::uint64_t>(std::pow(static_cast<double>(p), static_cast<double>(d)) + 0.5);
        for (std::uint64_t code = 0; code < combos; ++code) {
            std::uint64_t rest = code;
            for (long i = 0; i < d; ++i) {
                c[static_cast<std::size_t>(i)] = rest % p;
                rest /= p;
            }
            ModPoly cand(p, c);
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
                break;  // restart at the same degree on the reduced f
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

CriterionResult criterion_oracle_equivalence(const VerifyOptions& opts) {
    CriterionResult res{11, "oracle-equivalence", false, "", 0};
    Failures fails;

    std::mt19937_64 rng(opts.seed ^ 0x5eedull);
    std::uniform_int_distribution<int> factor_count(2, 3), mult_dist(1, 2);
    std::vector<std::vector<std::pair<IntPoly, unsigned>>> cases;
    for (int t = 0; t < 100; ++t) {
        std::vector<std::pair<IntPoly, unsigned>> expected;
        const int count = factor_count(rng);
        for (int i = 0; i < count; ++i) {
            IntPoly f = random_known_irreducible(rng);
            f = content_primitive(f).second;
            if (f.leading() < 0) f = -f;
            bool dup = false;
            for (auto& [g, m] : expected)
                if (g == f) dup = true;
            if (dup) {
                --i;
                continue;
            }
            expected.emplace_back(std::move(f), static_cast<unsigned>(mult_dist(rng)));
        }
        std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
            if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
            return a.first.coeffs() < b.first.coeffs();
        });
        cases.push_back(std::move(expected));
    }
    parallel_for(0, static_cast<long>(cases.size()), thread_count(opts), [&](long idx) {
        const auto& expected = cases[static_cast<std::size_t>(idx)];
        IntPoly product = IntPoly::constant(1);
        for (const auto& [f, m] : expected)
            for (unsigned i = 0; i < m; ++i) product *= f;
        const FactorDecomposition dec = factor_over_q(product, opts.seed + static_cast<std::uint64_t>(idx));
        bool ok = dec.factors.size() == expected.size();
        if (ok)
            for (std::size_t i = 0; i < expected.size(); ++i)
                if (!(dec.factors[i].poly == expected[i].first && dec.factors[i].multiplicity == expected[i].second))
                    ok = false;
        if (!ok) fails.add("factor multiset mismatch in constructed product case " + std::to_string(idx));
    });

    // factor_mod_p against exhaustive trial division, p <= 7, deg <= 6.
    std::mt19937_64 rng2(opts.seed ^ 0xfeedull);
    std::uniform_int_distribution<int> deg_dist(2, 6), coeff_dist(-20, 20);
    for (long p : {2L, 3L, 5L, 7L}) {
        for (int t = 0; t < 25; ++t) {
            std::vector<Int> c;
            int degree = deg_dist(rng2);
            c.assign(static_cast<std::size_t>(degree) + 1, Int(0));
            for (auto& v : c) v = Int(coeff_dist(rng2));
            if (c.back() == 0 || mpz_divisible_ui_p(c.back().get_mpz_t(), static_cast<unsigned long>(p))) {
                --t;
                continue;
            }
            IntPoly f(c);
            std::mt19937_64 cz_rng(opts.seed + static_cast<std::uint64_t>(t) * 31 + static_cast<std::uint64_t>(p));
            auto got = factor_mod_p(f, static_cast<std::uint64_t>(p), cz_rng);
            auto want = exhaustive_factor_mod_p(ModPoly::from_int_poly(f, static_cast<std::uint64_t>(p)));
            bool ok = got.size() == want.size();
            if (ok)
                for (std::size_t i = 0; i < want.size(); ++i)
                    if (!(got[i].poly == want[i].first && got[i].multiplicity == want[i].second)) ok = false;
            if (!ok) fails.add("mod-p factorization disagrees with trial division at p=" + std::to_string(p));
        }
    }

    res.pass = fails.empty();
    res.detail = res.pass ? "100 constructed products recovered; mod-p factorizations match trial division"
                          : fails.summary();
    return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "conjecture-scan",   "tilde-irreducible", "localization-minus-one", "localization-line",
        "theorem1-bound",    "squarefree",        "omega-table",            "dn-identities",
        "factor-degrees",    "cyclotomic-identities", "oracle-equivalence",
    };
    return names;
}

int suite_index(const std::string& name) {
    const auto& names = suite_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult res;
    switch (id) {
        case 1: res = criterion_conjecture_scan(opts); break;
        case 2: res = criterion_tilde_irreducible(opts); break;
        case 3: res = criterion_localization_minus_one(opts); break;
        case 4: res = criterion_localization_line(opts); break;
        case 5: res = criterion_theorem1_bound(opts); break;
        case 6: res = criterion_squarefree(opts); break;
        case 7: res = criterion_omega_table(opts); break;
        case 8: res = criterion_dn_identities(opts); break;
        case 9: res = criterion_factor_degrees(opts); break;
        case 10: res = criterion_cyclotomic(opts); break;
        case 11: res = criterion_oracle_equivalence(opts); break;
        default: throw std::invalid_argument("unknown criterion id " + std::to_string(id));
    }
    res.seconds =
        std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace kan
