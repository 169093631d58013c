#include "kan/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace kan {

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }
}

BigFloat BigFloat::from_rat(const Rat& r, mpfr_prec_t prec) {
    BigFloat out(prec);
    mpfr_set_q(out.v_, r.get_mpq_t(), MPFR_RNDN);
    return out;
}

BigFloat BigFloat::from_double(double d, mpfr_prec_t prec) {
    BigFloat out(prec);
    mpfr_set_d(out.v_, d, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::from_long(long v, mpfr_prec_t prec) {
    BigFloat out(prec);
    mpfr_set_si(out.v_, v, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat out(prec);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
    BigFloat out(prec);
    mpfr_set_si(out.v_, 1, MPFR_RNDN);
    mpfr_mul_2si(out.v_, out.v_, e, MPFR_RNDN);
    return out;
}

std::string BigFloat::str(int significant_digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", significant_digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join(a, b));
    mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join(a, b));
    mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join(a, b));
    mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join(a, b));
    mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(prec());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

BigFloat abs(const BigFloat& a) {
    BigFloat out(a.prec());
    mpfr_abs(out.v_, a.v_, MPFR_RNDN);
    return out;
}

BigFloat sqrt(const BigFloat& a) {
    BigFloat out(a.prec());
    mpfr_sqrt(out.v_, a.v_, MPFR_RNDN);
    return out;
}

BigFloat cos(const BigFloat& a) {
    BigFloat out(a.prec());
    mpfr_cos(out.v_, a.v_, MPFR_RNDN);
    return out;
}

BigFloat sin(const BigFloat& a) {
    BigFloat out(a.prec());
    mpfr_sin(out.v_, a.v_, MPFR_RNDN);
    return out;
}

BigFloat tan(const BigFloat& a) {
    BigFloat out(a.prec());
    mpfr_tan(out.v_, a.v_, MPFR_RNDN);
    return out;
}

BigFloat acos(const BigFloat& a) {
    BigFloat out(a.prec());
    mpfr_acos(out.v_, a.v_, MPFR_RNDN);
    return out;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join(a, b));
    mpfr_hypot(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat pow_si(const BigFloat& a, long e) {
    BigFloat out(a.prec());
    mpfr_pow_si(out.v_, a.v_, e, MPFR_RNDN);
    return out;
}

BigFloat mul_2si(const BigFloat& a, long e) {
    BigFloat out(a.prec());
    mpfr_mul_2si(out.v_, a.v_, e, MPFR_RNDN);
    return out;
}

Int BigFloat::floor_to_int() const {
    BigFloat f(prec());
    mpfr_floor(f.v_, v_);
    Int out;
    mpfr_get_z(out.get_mpz_t(), f.v_, MPFR_RNDN);
    return out;
}

Int BigFloat::ceil_to_int() const {
    BigFloat f(prec());
    mpfr_ceil(f.v_, v_);
    Int out;
    mpfr_get_z(out.get_mpz_t(), f.v_, MPFR_RNDN);
    return out;
}

// ---------- BigComplex ----------

BigComplex BigComplex::from_doubles(double r, double i, mpfr_prec_t prec) {
    return BigComplex(BigFloat::from_double(r, prec), BigFloat::from_double(i, prec));
}

BigComplex BigComplex::conj() const { return BigComplex(re, -im); }

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }

BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

BigComplex eval_poly(const RatPoly& p, const BigComplex& z) {
    const mpfr_prec_t prec = z.prec();
    BigComplex acc(prec);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * z;
        BigFloat c = BigFloat::from_rat(p.coeffs()[i], prec);
        mpfr_add(acc.re.raw(), acc.re.raw(), c.raw(), MPFR_RNDN);
    }
    return acc;
}

BigFloat poly_magnitude(const RatPoly& p, const BigFloat& t) {
    const mpfr_prec_t prec = t.prec();
    BigFloat acc(prec);
    mpfr_set_zero(acc.raw(), 1);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * t;
        Rat c = rat_abs(p.coeffs()[i]);
        BigFloat cf = BigFloat::from_rat(c, prec);
        mpfr_add(acc.raw(), acc.raw(), cf.raw(), MPFR_RNDN);
    }
    return acc;
}

}  // namespace kan
