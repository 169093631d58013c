#include "kan/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>

namespace kan {

namespace {

// Small primes for modular shortcuts (gcd fast path, rational-root lifting).
const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<std::uint32_t> out;
        std::vector<bool> composite(100000, false);
        for (std::uint32_t i = 2; i < composite.size(); ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < composite.size(); j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

std::uint64_t mod_of(const Int& v, std::uint64_t p) {
    Int r;
    mpz_mod_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::vector<std::uint64_t> reduce_mod(const IntPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_of(f.coeffs()[i], p);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Euclidean gcd of dense coefficient vectors over F_p; returns degree only use.
std::vector<std::uint64_t> fp_gcd(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    auto inv = [&](std::uint64_t x) {
        // Fermat inverse; p prime.
        std::uint64_t r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = mulmod(r, base, p);
            base = mulmod(base, base, p);
            e >>= 1;
        }
        return r;
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t lead_inv = inv(b.back());
        while (a.size() >= b.size()) {
            std::uint64_t q = mulmod(a.back(), lead_inv, p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                std::uint64_t sub = mulmod(q, b[i], p);
                a[i + shift] = (a[i + shift] + p - sub) % p;
            }
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint64_t> fp_derivative(const std::vector<std::uint64_t>& f, std::uint64_t p) {
    std::vector<std::uint64_t> d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mulmod(f[i], i % p, p));
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

std::uint64_t fp_eval(const std::vector<std::uint64_t>& f, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (mulmod(acc, x, p) + f[i]) % p;
    return acc;
}

}  // namespace

// ---------- RatPoly ----------

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(Rat v) {
    RatPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

RatPoly RatPoly::monomial(std::size_t power, Rat coeff) {
    RatPoly p;
    if (coeff != 0) {
        p.c_.assign(power + 1, Rat(0));
        p.c_[power] = std::move(coeff);
    }
    return p;
}

const Rat& RatPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rat RatPoly::eval(const Rat& point) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * point + c_[i];
    return acc;
}

RatPoly RatPoly::operator-() const {
    RatPoly out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rat(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rat(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    normalize();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(prod));
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

RatPoly& RatPoly::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= scalar;
    return *this;
}

// ---------- IntPoly ----------

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::monomial(std::size_t power, Int coeff) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(power + 1, Int(0));
        p.c_[power] = std::move(coeff);
    }
    return p;
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Int IntPoly::eval(const Int& point) const {
    Int acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * point + c_[i];
    return acc;
}

Rat IntPoly::eval(const Rat& point) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * point + Rat(c_[i]);
    return acc;
}

IntPoly IntPoly::operator-() const {
    IntPoly out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> prod(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(prod));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPoly& IntPoly::operator*=(const Int& scalar) {
    if (scalar == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= scalar;
    return *this;
}

// ---------- shared formatting ----------

namespace {

template <typename Poly, typename CoeffToString>
std::string poly_str(const Poly& p, std::string_view var, CoeffToString coeff_str) {
    if (p.is_zero()) return "0";
    using Coeff = std::decay_t<decltype(p.coeffs()[0])>;
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const auto& c = p.coeffs()[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Coeff magnitude = negative ? Coeff(-c) : c;
        std::string mag = coeff_str(magnitude);
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (i == 0) {
            out << mag;
        } else {
            if (mag != "1") out << mag;
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace

std::string RatPoly::str(std::string_view var) const {
    return poly_str(*this, var, [](const Rat& c) { return rat_to_string(c); });
}

std::string IntPoly::str(std::string_view var) const {
    return poly_str(*this, var, [](const Int& c) { return c.get_str(); });
}

// ---------- calculus / structure ----------

RatPoly derivative(const RatPoly& p) {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) d.push_back(p.coeffs()[i] * Rat(static_cast<long>(i)));
    return RatPoly(std::move(d));
}

IntPoly derivative(const IntPoly& p) {
    std::vector<Int> d;
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) d.push_back(p.coeffs()[i] * Int(static_cast<long>(i)));
    return IntPoly(std::move(d));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.degree() < den.degree()) return {RatPoly(), num};
    std::vector<Rat> rem(num.coeffs());
    const auto dn = static_cast<std::size_t>(den.degree());
    std::vector<Rat> quot(rem.size() - dn, Rat(0));
    const Rat& lead = den.leading();
    for (std::size_t top = rem.size(); top-- > dn;) {
        if (rem[top] == 0) continue;
        Rat q = rem[top] / lead;
        quot[top - dn] = q;
        for (std::size_t j = 0; j <= dn; ++j) rem[top - dn + j] -= q * den.coeffs()[j];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly div_exact(const RatPoly& num, const RatPoly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::domain_error("not divisible");
    return q;
}

IntPoly div_exact(const IntPoly& num, const IntPoly& den) {
    // Exact division over Z: do it over Q, then require integer coefficients.
    RatPoly q = div_exact(to_rat_poly(num), to_rat_poly(den));
    std::vector<Int> out;
    out.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs()) {
        if (c.get_den() != 1) throw std::domain_error("not divisible");
        out.push_back(c.get_num());
    }
    return IntPoly(std::move(out));
}

std::pair<Int, IntPoly> content_primitive(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("content of zero polynomial");
    Int content(0);
    for (const auto& c : p.coeffs()) content = int_gcd(content, c);
    std::vector<Int> prim;
    prim.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Int q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
        prim.push_back(std::move(q));
    }
    return {content, IntPoly(std::move(prim))};
}

// ---------- fraction-free gcd ----------

namespace {

// Knuth's pseudo-remainder: lc(b)^{deg a - deg b + 1} * a = q*b + r.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const long db = b.degree();
    long e = a.degree() - db + 1;
    const Int& d = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        IntPoly shifted = IntPoly::monomial(static_cast<std::size_t>(r.degree() - db), r.leading());
        r = r * d - shifted * b;
        --e;
    }
    if (e > 0) {
        Int scale = int_pow(d, static_cast<unsigned long>(e));
        r *= scale;
    }
    return r;
}

IntPoly positive_primitive(const IntPoly& p) {
    auto [c, prim] = content_primitive(p);
    if (prim.leading() < 0) return -prim;
    return prim;
}

IntPoly subresultant_gcd(IntPoly a, IntPoly b) {
    a = positive_primitive(a);
    b = positive_primitive(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.is_zero()) return a;
    if (b.degree() == 0) return IntPoly::constant(1);
    Int g(1), h(1);
    while (true) {
        const long delta = a.degree() - b.degree();
        IntPoly r = pseudo_rem(a, b);
        if (r.is_zero()) return positive_primitive(b);
        if (r.degree() == 0) return IntPoly::constant(1);
        Int divisor = g * int_pow(h, static_cast<unsigned long>(delta));
        a = std::move(b);
        {
            std::vector<Int> scaled;
            scaled.reserve(r.coeffs().size());
            for (const auto& c : r.coeffs()) {
                Int q;
                mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
                scaled.push_back(std::move(q));
            }
            b = IntPoly(std::move(scaled));
        }
        g = a.leading();
        if (delta > 0) {
            Int gd = int_pow(g, static_cast<unsigned long>(delta));
            Int hd = int_pow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd.get_mpz_t());
        }
    }
}

// Sound shortcut: if gcd of the mod-p images is constant for one prime not
// dividing either leading coefficient, the gcd over Q is 1.
bool gcd_is_one_mod_p(const IntPoly& a, const IntPoly& b) {
    int tried = 0;
    for (std::uint32_t p : small_primes()) {
        if (tried >= 2) break;
        if (mod_of(a.leading(), p) == 0 || mod_of(b.leading(), p) == 0) continue;
        ++tried;
        auto g = fp_gcd(reduce_mod(a, p), reduce_mod(b, p), p);
        if (g.size() == 1) return true;
    }
    return false;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
    if (a.is_zero()) return positive_primitive(b);
    if (b.is_zero()) return positive_primitive(a);
    if (a.degree() > 0 && b.degree() > 0 && gcd_is_one_mod_p(a, b)) return IntPoly::constant(1);
    return subresultant_gcd(a, b);
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    IntPoly g = poly_gcd(primitive_scaling(a), primitive_scaling(b));
    return monic(to_rat_poly(g));
}

// ---------- substitutions ----------

RatPoly compose_one_minus_x(const RatPoly& p) {
    // Horner in the polynomial ring with argument (1 - x).
    const RatPoly arg{Rat(1), Rat(-1)};
    RatPoly acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * arg;
        acc += RatPoly::constant(p.coeffs()[i]);
    }
    return acc;
}

RatPoly reversed(const RatPoly& p) {
    std::vector<Rat> c(p.coeffs().rbegin(), p.coeffs().rend());
    return RatPoly(std::move(c));
}

IntPoly reversed(const IntPoly& p) {
    std::vector<Int> c(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPoly(std::move(c));
}

RatPoly homogenize_at_one_minus_x(const RatPoly& a) {
    if (a.is_zero()) return RatPoly();
    const auto m = static_cast<std::size_t>(a.degree());
    const RatPoly one_minus_x{Rat(1), Rat(-1)};
    // powers[j] = (1-x)^j
    std::vector<RatPoly> powers(m + 1);
    powers[0] = RatPoly::constant(Rat(1));
    for (std::size_t j = 1; j <= m; ++j) powers[j] = powers[j - 1] * one_minus_x;
    RatPoly out;
    for (std::size_t k = 0; k <= m; ++k) {
        if (a.coeffs()[k] == 0) continue;
        out += RatPoly::monomial(k, a.coeffs()[k]) * powers[m - k];
    }
    return out;
}

// ---------- cyclotomic ----------

RatPoly cyclotomic(unsigned long d) {
    if (d == 0) throw std::invalid_argument("cyclotomic index must be positive");
    static std::map<unsigned long, RatPoly> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    RatPoly result;
    if (d == 1) {
        result = RatPoly{Rat(-1), Rat(1)};
    } else {
        // x^d - 1 divided by every lower cyclotomic at divisor indices;
        // the divisions must all be exact, which is its own sanity check.
        std::vector<Rat> c(d + 1, Rat(0));
        c[0] = Rat(-1);
        c[d] = Rat(1);
        result = RatPoly(std::move(c));
        for (unsigned long e = 1; e < d; ++e)
            if (d % e == 0) result = div_exact(result, cyclotomic(e));
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(d, std::move(result)).first->second;
}

// ---------- conversions ----------

std::pair<Int, IntPoly> clear_denominators(const RatPoly& p) {
    Int lcm(1);
    for (const auto& c : p.coeffs()) {
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        lcm = std::move(l);
    }
    std::vector<Int> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Rat scaled = c * Rat(lcm);
        out.push_back(scaled.get_num());
    }
    return {lcm, IntPoly(std::move(out))};
}

IntPoly primitive_scaling(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    auto [den, ip] = clear_denominators(p);
    (void)den;
    return content_primitive(ip).second;
}

RatPoly to_rat_poly(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    RatPoly out = p;
    Rat inv = Rat(1) / p.leading();
    out *= inv;
    return out;
}

// ---------- rational roots ----------

namespace {

// Wang-style rational reconstruction of u/v from residue r mod m with
// |u| <= num_bound, 0 < v <= den_bound; requires m > 2*num_bound*den_bound.
bool rational_reconstruct(const Int& r, const Int& m, const Int& num_bound, const Int& den_bound, Rat& out) {
    Int a = m, b = r % m;
    if (b < 0) b += m;
    Int x0(0), x1(1);
    while (b > num_bound) {
        Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        Int xt = x0 - q * x1;
        x0 = x1;
        x1 = xt;
    }
    Int u = b, v = x1;
    if (v == 0) return false;
    if (v < 0) {
        u = -u;
        v = -v;
    }
    if (v > den_bound) return false;
    if (int_gcd(u < 0 ? Int(-u) : u, v) != 1) return false;
    out = make_rat(u, v);
    return true;
}

}  // namespace

std::set<Rat> rational_roots(const RatPoly& p) {
    if (p.is_zero()) throw std::domain_error("rational roots of zero polynomial");
    std::set<Rat> roots;
    if (p.degree() == 0) return roots;

    IntPoly f = primitive_scaling(p);
    // Strip x^k; 0 is a root iff the constant term vanishes.
    std::size_t low = 0;
    while (low < f.coeffs().size() && f.coeffs()[low] == 0) ++low;
    if (low > 0) {
        roots.insert(Rat(0));
        f = IntPoly(std::vector<Int>(f.coeffs().begin() + low, f.coeffs().end()));
    }
    if (f.degree() < 1) return roots;

    // Work on the squarefree part; it has the same rational roots.
    IntPoly g = f;
    {
        IntPoly d = derivative(f);
        IntPoly common = poly_gcd(f, d);
        if (common.degree() > 0) g = div_exact(f, common);
    }

    const Int c0 = g.coeff(0);     // nonzero after stripping x^k
    const Int lc = g.leading();
    const Int num_bound = c0 < 0 ? Int(-c0) : c0;   // |u| divides |c0|
    const Int den_bound = lc < 0 ? Int(-lc) : lc;   // v divides |lc|

    // Prime with unit leading coefficient and squarefree image: every rational
    // root reduces to a simple root mod p, which lifts uniquely.
    std::uint64_t prime = 0;
    std::vector<std::uint64_t> gp;
    for (std::uint32_t cand : small_primes()) {
        if (mod_of(lc, cand) == 0) continue;
        auto img = reduce_mod(g, cand);
        auto der = fp_derivative(img, cand);
        if (der.empty()) continue;
        if (fp_gcd(img, der, cand).size() != 1) continue;
        prime = cand;
        gp = std::move(img);
        break;
    }
    if (prime == 0) throw std::runtime_error("no usable prime for rational root search");

    // Roots mod p by direct scan (p is small).
    std::vector<std::uint64_t> residues;
    for (std::uint64_t x = 0; x < prime; ++x)
        if (fp_eval(gp, x, prime) == 0) residues.push_back(x);
    if (residues.empty()) return roots;

    // Newton-lift each residue to p^(2^j) > 2*|c0|*|lc|, then reconstruct u/v.
    const Int target = 2 * num_bound * den_bound;
    const IntPoly gd = derivative(g);
    for (std::uint64_t r0 : residues) {
        Int modulus(static_cast<unsigned long>(prime));
        Int r(static_cast<unsigned long>(r0));
        while (modulus <= target) {
            modulus *= modulus;
            Int val = g.eval(r) % modulus;
            Int der = gd.eval(r) % modulus;
            Int der_inv;
            if (mpz_invert(der_inv.get_mpz_t(), der.get_mpz_t(), modulus.get_mpz_t()) == 0)
                throw std::runtime_error("lost invertibility during root lifting");
            r = (r - val * der_inv) % modulus;
            if (r < 0) r += modulus;
        }
        Rat candidate;
        if (!rational_reconstruct(r, modulus, num_bound, den_bound, candidate)) continue;
        // Rational-root-theorem filter, then the exact check that decides.
        Int u = candidate.get_num(), v = candidate.get_den();
        if (u != 0 && !mpz_divisible_p(c0.get_mpz_t(), u.get_mpz_t())) continue;
        if (!mpz_divisible_p(lc.get_mpz_t(), v.get_mpz_t())) continue;
        if (p.eval(candidate) == 0) roots.insert(candidate);
    }
    return roots;
}

// ---------- bracket text format ----------

RatPoly parse_poly(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("polynomial literal must be bracketed, e.g. [1, -3/2, 0, 2]");
    text = text.substr(1, text.size() - 2);
    std::vector<Rat> coeffs;
    std::size_t pos = 0;
    bool any = false;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        bool blank = true;
        for (char ch : item)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (!blank) {
            coeffs.push_back(parse_rat(item));
            any = true;
        } else if (comma != std::string_view::npos || any) {
            throw std::invalid_argument("empty coefficient in polynomial literal");
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return RatPoly(std::move(coeffs));
}

std::string poly_to_bracket_string(const RatPoly& p) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out << ", ";
        out << rat_to_string(p.coeffs()[i]);
    }
    if (p.is_zero()) out << "0";
    out << "]";
    return out.str();
}

}  // namespace kan
