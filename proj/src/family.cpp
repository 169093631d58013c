#include "kan/family.hpp"

#include <sstream>
#include <stdexcept>

namespace kan {

// ---------- OmegaRat ----------

std::string OmegaRat::str() const {
    std::ostringstream out;
    if (v == 0) return rat_to_string(u);
    if (u != 0) out << rat_to_string(u) << (v > 0 ? " + " : " - ");
    else if (v < 0) out << "-";
    Rat mag = rat_abs(v);
    if (mag != 1) out << rat_to_string(mag) << "*";
    out << "w";
    return out.str();
}

OmegaRat omega_pow(unsigned long n) {
    OmegaRat result = OmegaRat::from_rat(Rat(1));
    OmegaRat base = OmegaRat::omega();
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

OmegaRat eval_at_omega(const RatPoly& p) {
    OmegaRat acc;
    const OmegaRat w = OmegaRat::omega();
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * w + OmegaRat::from_rat(p.coeffs()[i]);
    return acc;
}

// ---------- family ----------

FamilyParams::FamilyParams(Rat a_in, long n_in) : a(std::move(a_in)), n(n_in) {
    if (a == 0) throw std::invalid_argument("parameter a must be nonzero");
    if (n < 2) throw std::invalid_argument("exponent n must be at least 2");
}

RatPoly build_k(const FamilyParams& params) {
    const auto n = static_cast<unsigned long>(params.n);
    // x^n + sum_k C(n,k) (-x)^k + a^n
    std::vector<Rat> c(n + 1, Rat(0));
    for (unsigned long k = 0; k <= n; ++k) {
        Int b = binomial(n, k);
        if (k % 2 == 1) b = -b;
        c[k] += Rat(b);
    }
    c[n] += 1;
    c[0] += rat_pow(params.a, n);
    return RatPoly(std::move(c));
}

IntPoly build_l_half(const FamilyParams& params) {
    if (params.a != Rat(1, 2) && params.a != Rat(-1, 2))
        throw std::invalid_argument("integer scaling is defined for a = 1/2 or a = -1/2 only");
    const auto n = static_cast<unsigned long>(params.n);
    // x^n + (2-x)^n + (2a)^n
    std::vector<Int> c(n + 1, Int(0));
    for (unsigned long k = 0; k <= n; ++k) {
        Int term = binomial(n, k) * int_pow(Int(2), n - k);
        if (k % 2 == 1) term = -term;
        c[k] += term;
    }
    c[n] += 1;
    const bool a_negative = params.a < 0;
    c[0] += (a_negative && n % 2 == 1) ? Int(-1) : Int(1);
    return IntPoly(std::move(c));
}

long tilde_degree_formula(long n) {
    if (n % 6 == 1) return n - 7;
    return n - (n % 6);
}

TrivialFactorReport trivial_factors(long n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    TrivialFactorReport rep;
    rep.n = n;
    rep.mult_zero = rep.mult_one = (n % 2 == 1) ? 1 : 0;
    switch (n % 3) {
        case 0: rep.mult_omega = 0; break;
        case 2: rep.mult_omega = 1; break;
        default: rep.mult_omega = 2; break;
    }
    rep.tilde_degree = tilde_degree_formula(n);
    return rep;
}

RatPoly tilde_k(long n) {
    const TrivialFactorReport rep = trivial_factors(n);
    RatPoly k = build_k(FamilyParams(Rat(-1), n));
    const RatPoly x = RatPoly::x();
    const RatPoly x_minus_1{Rat(-1), Rat(1)};
    const RatPoly omega_factor{Rat(1), Rat(-1), Rat(1)};
    RatPoly stripped = k;
    for (int i = 0; i < rep.mult_zero; ++i) stripped = div_exact(stripped, x);
    for (int i = 0; i < rep.mult_one; ++i) stripped = div_exact(stripped, x_minus_1);
    for (int i = 0; i < rep.mult_omega; ++i) stripped = div_exact(stripped, omega_factor);
    if (stripped.degree() != rep.tilde_degree) {
        std::ostringstream msg;
        msg << "stripped degree " << stripped.degree() << " does not match d_" << n << " = " << rep.tilde_degree;
        throw std::logic_error(msg.str());
    }
    // The removed part must re-multiply to K exactly.
    RatPoly rebuilt = stripped;
    for (int i = 0; i < rep.mult_zero; ++i) rebuilt *= x;
    for (int i = 0; i < rep.mult_one; ++i) rebuilt *= x_minus_1;
    for (int i = 0; i < rep.mult_omega; ++i) rebuilt *= omega_factor;
    if (rebuilt != k) throw std::logic_error("trivial-factor strip failed re-multiplication");
    return stripped;
}

GcdReport gcd_analysis(const FamilyParams& params) {
    GcdReport rep;
    const auto n = static_cast<unsigned long>(params.n);
    // |a|^{n/(n-1)} < 1/2  <=>  2^{n-1} |p|^n < q^n  for a = p/q in lowest terms.
    Int p_abs = params.a.get_num();
    if (p_abs < 0) p_abs = -p_abs;
    const Int lhs = int_pow(Int(2), n - 1) * int_pow(p_abs, n);
    const Int rhs = int_pow(params.a.get_den(), n);
    if (lhs == rhs)
        throw std::logic_error("|a|^{n/(n-1)} = 1/2 should be impossible for rational a");
    rep.predicted_trivial = lhs < rhs;

    const RatPoly k = build_k(params);
    rep.actual_gcd = poly_gcd(k, derivative(k));

    // gcd | x^{n-1} + a^n
    RatPoly target = RatPoly::monomial(n - 1);
    target += RatPoly::constant(rat_pow(params.a, n));
    try {
        div_exact(target, rep.actual_gcd);
        rep.divides_x_pow_plus_an = true;
    } catch (const std::domain_error&) {
        rep.divides_x_pow_plus_an = false;
    }
    return rep;
}

SquarefreeReport squarefree_check(const FamilyParams& params) {
    const RatPoly k = build_k(params);
    RatPoly g = poly_gcd(k, derivative(k));
    SquarefreeReport rep;
    rep.squarefree = g.degree() == 0;
    if (!rep.squarefree) rep.witness = std::move(g);
    return rep;
}

Rat evaluate_k(const FamilyParams& params, const Rat& point) {
    const auto n = static_cast<unsigned long>(params.n);
    return rat_pow(point, n) + rat_pow(Rat(1) - point, n) + rat_pow(params.a, n);
}

OmegaTableRow verify_omega_table(long n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    OmegaTableRow row;
    row.n = n;
    const auto un = static_cast<unsigned long>(n);
    const OmegaRat w = omega_pow(1);
    const OmegaRat wn = omega_pow(un);
    const OmegaRat wbar_n = wn.conj();  // (1-w)^n = conj(w)^n for real exponent laws in this ring
    const Rat sign_n = (n % 2 == 0) ? Rat(1) : Rat(-1);

    row.k_value = wn + wbar_n + OmegaRat::from_rat(sign_n);
    const OmegaRat wn1 = omega_pow(un - 1);
    row.k_prime = Rat(n) * (wn1 - wn1.conj());
    const OmegaRat wn2 = omega_pow(un - 2);
    row.k_second = Rat(n) * Rat(n - 1) * (wn2 + wn2.conj());

    // Case table: K(w) by n mod 6 is 3, 0, 0, -3, 0, 0. Where K(w) = 0, the
    // derivative decides between a simple and a double root; 2w - 1 plays the
    // role of i*sqrt(3).
    const OmegaRat i_sqrt3(Rat(-1), Rat(2));
    bool ok = true;
    switch (n % 6) {
        case 0: ok = row.k_value == OmegaRat::from_rat(Rat(3)); break;
        case 3: ok = row.k_value == OmegaRat::from_rat(Rat(-3)); break;
        case 1:
        case 4: {
            ok = row.k_value.is_zero() && row.k_prime.is_zero();
            const Rat mag = Rat(n) * Rat(n - 1);
            ok = ok && row.k_second == OmegaRat::from_rat(n % 6 == 1 ? mag : -mag);
            break;
        }
        case 2:
        case 5: {
            ok = row.k_value.is_zero();
            const OmegaRat expected = Rat(n % 6 == 2 ? n : -n) * i_sqrt3;
            ok = ok && row.k_prime == expected;
            break;
        }
    }
    row.matches_case_table = ok;
    row.omega_multiplicity = row.k_value.is_zero() ? (row.k_prime.is_zero() ? 2 : 1) : 0;
    if (row.omega_multiplicity != trivial_factors(n).mult_omega)
        throw std::logic_error("omega multiplicity disagrees with the closed form");
    return row;
}

}  // namespace kan
