#include "kan/modp.hpp"

#include <algorithm>
#include <sstream>

namespace kan {

namespace {

std::uint64_t mulmod_u(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (e) {
        if (e & 1) r = mulmod_u(r, base, p);
        base = mulmod_u(base, base, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u(std::uint64_t a, std::uint64_t p) { return powmod_u(a, p - 2, p); }

bool is_prime_u(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin for 64-bit range.
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t mod_of_int(const Int& v, std::uint64_t p) {
    Int r;
    mpz_mod_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

// ---------- ModPoly ----------

std::uint64_t ModPoly::check_modulus(std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31)) throw std::invalid_argument("modulus must be a prime below 2^31");
    return p;
}

void ModPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(check_modulus(p)), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    normalize();
}

ModPoly ModPoly::from_int_poly(const IntPoly& f, std::uint64_t p) {
    check_modulus(p);
    if (!f.is_zero() && mod_of_int(f.leading(), p) == 0) {
        std::ostringstream msg;
        msg << "bad prime " << p << ": divides the leading coefficient";
        throw BadPrimeError(msg.str());
    }
    std::vector<std::uint64_t> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_of_int(f.coeffs()[i], p);
    return ModPoly(p, std::move(c));
}

ModPoly ModPoly::xpoly(std::uint64_t p) { return ModPoly(p, {0, 1}); }

ModPoly ModPoly::constant(std::uint64_t p, std::uint64_t v) { return ModPoly(p, {v}); }

ModPoly ModPoly::operator+(const ModPoly& rhs) const {
    std::vector<std::uint64_t> out(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (coeff(i) + rhs.coeff(i)) % p_;
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::operator-(const ModPoly& rhs) const {
    std::vector<std::uint64_t> out(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (coeff(i) + p_ - rhs.coeff(i)) % p_;
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::operator*(const ModPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return ModPoly(p_);
    std::vector<std::uint64_t> out(c_.size() + rhs.c_.size() - 1);
    for (std::size_t k = 0; k < out.size(); ++k) {
        unsigned __int128 acc = 0;
        const std::size_t lo = k >= rhs.c_.size() ? k - rhs.c_.size() + 1 : 0;
        const std::size_t hi = std::min(k, c_.size() - 1);
        for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<unsigned __int128>(c_[i]) * rhs.c_[k - i];
        out[k] = static_cast<std::uint64_t>(acc % p_);
    }
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::make_monic() const {
    if (is_zero() || c_.back() == 1) return *this;
    const std::uint64_t inv = invmod_u(c_.back(), p_);
    std::vector<std::uint64_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mulmod_u(c_[i], inv, p_);
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::derivative() const {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(mulmod_u(c_[i], i % p_, p_));
    return ModPoly(p_, std::move(out));
}

std::uint64_t ModPoly::eval(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = (mulmod_u(acc, x, p_) + c_[i]) % p_;
    return acc;
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& num, const ModPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.degree() < den.degree()) return {ModPoly(num.p_), num};
    const std::uint64_t p = num.p_;
    // Barrett reduction: magic underestimates floor(2^64/p) by at most one,
    // so x - q*p lands in [0, 3p) and two conditional subtractions finish.
    const std::uint64_t magic = ~0ull / p;
    auto redc = [p, magic](std::uint64_t x) {
        std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * magic) >> 64);
        std::uint64_t r = x - q * p;
        while (r >= p) r -= p;
        return r;
    };
    std::vector<std::uint64_t> rem = num.c_;
    const std::size_t dn = den.c_.size() - 1;
    std::vector<std::uint64_t> quot(rem.size() - dn, 0);
    const std::uint64_t lead_inv = invmod_u(den.c_.back(), p);
    for (std::size_t top = rem.size(); top-- > dn;) {
        if (rem[top] == 0) continue;
        const std::uint64_t q = redc(rem[top] * lead_inv);
        quot[top - dn] = q;
        for (std::size_t j = 0; j < dn; ++j) {
            const std::uint64_t sub = redc(q * den.c_[j]);
            std::uint64_t v = rem[top - dn + j] + p - sub;
            if (v >= p) v -= p;
            rem[top - dn + j] = v;
        }
        rem[top] = 0;
    }
    return {ModPoly(p, std::move(quot)), ModPoly(p, std::move(rem))};
}

ModPoly operator%(const ModPoly& num, const ModPoly& den) { return divmod(num, den).second; }

ModPoly mod_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

ModPoly ModPoly::powmod(const Int& e, const ModPoly& f) const {
    ModPoly base = *this % f;
    ModPoly result = ModPoly::constant(p_, 1);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % f;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % f;
    }
    return result;
}

// ---------- factorization over F_p ----------

namespace {

// Replace x^p by x: p-th root of a polynomial that is a p-th power
// (Frobenius is the identity on F_p coefficients).
ModPoly pth_root(const ModPoly& f) {
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += static_cast<std::size_t>(p))
        out.push_back(f.coeffs()[i]);
    return ModPoly(p, std::move(out));
}

// Monic squarefree factorization in characteristic p.
std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(const ModPoly& f_in) {
    std::vector<std::pair<ModPoly, unsigned>> out;
    ModPoly f = f_in.make_monic();
    if (f.degree() < 1) return out;
    ModPoly d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p)
        for (auto& [g, m] : squarefree_decomposition(pth_root(f)))
            out.emplace_back(g, m * static_cast<unsigned>(f.modulus()));
        return out;
    }
    ModPoly c = mod_gcd(f, d);
    ModPoly w = divmod(f, c).first;
    unsigned i = 1;
    while (!(w.degree() == 0)) {
        ModPoly y = mod_gcd(w, c);
        ModPoly z = divmod(w, y).first;
        if (z.degree() > 0) out.emplace_back(z.make_monic(), i);
        w = std::move(y);
        c = divmod(c, w).first;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_decomposition(pth_root(c)))
            out.emplace_back(g, m * static_cast<unsigned>(f.modulus()));
    }
    return out;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, long>> distinct_degree(const ModPoly& f_in) {
    std::vector<std::pair<ModPoly, long>> out;
    ModPoly f = f_in.make_monic();
    const std::uint64_t p = f.modulus();
    ModPoly h = ModPoly::xpoly(p) % f;
    long d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = h.powmod(Int(static_cast<unsigned long>(p)), f);
        ModPoly g = mod_gcd(h - ModPoly::xpoly(p), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = divmod(f, g).first;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

ModPoly random_poly(std::uint64_t p, long max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(max_deg) + 1);
    for (auto& v : c) v = coeff(rng);
    return ModPoly(p, std::move(c));
}

// Equal-degree splitting (Cantor-Zassenhaus; trace map for p = 2).
void equal_degree(const ModPoly& f, long d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.make_monic());
        return;
    }
    const std::uint64_t p = f.modulus();
    while (true) {
        ModPoly u = random_poly(p, f.degree() - 1, rng);
        if (u.degree() < 1) continue;
        ModPoly g(p);
        if (p == 2) {
            ModPoly t = u % f;
            ModPoly acc = t;
            for (long i = 1; i < d; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            g = mod_gcd(acc, f);
        } else {
            Int e = (int_pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
            ModPoly t = u.powmod(e, f) - ModPoly::constant(p, 1);
            g = mod_gcd(t, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<ModFactor> factor_mod_p(const IntPoly& f, std::uint64_t p, std::mt19937_64& rng) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    if (!is_prime_u(p)) throw std::invalid_argument("modulus must be prime");
    const ModPoly image = ModPoly::from_int_poly(f, p);
    std::vector<ModFactor> out;
    if (image.degree() < 1) return out;
    for (const auto& [part, mult] : squarefree_decomposition(image)) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<ModPoly> pieces;
            equal_degree(prod, d, rng, pieces);
            for (auto& piece : pieces) out.push_back({std::move(piece), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        return a.poly.coeffs() < b.poly.coeffs();
    });
    return out;
}

std::map<long, long> mod_factor_degrees(const IntPoly& f, std::uint64_t p) {
    const ModPoly image = ModPoly::from_int_poly(f, p);
    if (mod_gcd(image, image.derivative()).degree() != 0)
        throw std::invalid_argument("degree multiset requires a squarefree image");
    std::map<long, long> degrees;
    for (const auto& [prod, d] : distinct_degree(image)) degrees[d] += prod.degree() / d;
    return degrees;
}

bool squarefree_mod_p(const IntPoly& f, std::uint64_t p) {
    const ModPoly image = ModPoly::from_int_poly(f, p);
    if (image.degree() < 1) return false;
    return mod_gcd(image, image.derivative()).degree() == 0;
}

std::vector<std::uint64_t> good_primes(const IntPoly& f, std::size_t count, std::uint64_t above) {
    std::vector<std::uint64_t> out;
    std::size_t rejected = 0;
    for (std::uint64_t p = above + 1; out.size() < count; ++p) {
        if (p >= (1ull << 31) || rejected > 5000)
            throw BadPrimeError("no usable primes; input is likely not squarefree");
        if (!is_prime_u(p)) continue;
        if (mod_of_int(f.leading(), p) == 0 || !squarefree_mod_p(f, p)) {
            ++rejected;
            continue;
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace kan
