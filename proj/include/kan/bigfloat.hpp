#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "kan/poly.hpp"
#include "kan/rational.hpp"

namespace kan {

// RAII wrapper over mpfr_t. Binary operations round to nearest at the larger
// operand precision; directed-rounding code paths use raw() directly.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); }
    BigFloat(const BigFloat& other) {
        mpfr_init2(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& other) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, other.v_);
    }
    BigFloat& operator=(const BigFloat& other) {
        if (this != &other) {
            mpfr_set_prec(v_, mpfr_get_prec(other.v_));
            mpfr_set(v_, other.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& other) noexcept {
        mpfr_swap(v_, other.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static BigFloat from_rat(const Rat& r, mpfr_prec_t prec);
    static BigFloat from_double(double d, mpfr_prec_t prec);
    static BigFloat from_long(long v, mpfr_prec_t prec);
    static BigFloat pi(mpfr_prec_t prec);
    static BigFloat pow2(long e, mpfr_prec_t prec);  // 2^e exactly

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int significant_digits) const;

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend BigFloat abs(const BigFloat& a);
    friend BigFloat sqrt(const BigFloat& a);
    friend BigFloat cos(const BigFloat& a);
    friend BigFloat sin(const BigFloat& a);
    friend BigFloat tan(const BigFloat& a);
    friend BigFloat acos(const BigFloat& a);
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b);
    friend BigFloat pow_si(const BigFloat& a, long e);
    friend BigFloat mul_2si(const BigFloat& a, long e);

    Int floor_to_int() const;
    Int ceil_to_int() const;

private:
    mpfr_t v_;
};

// Complex number with BigFloat components at a shared precision.
struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {
        mpfr_set_zero(re.raw(), 1);
        mpfr_set_zero(im.raw(), 1);
    }
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex from_doubles(double r, double i, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return re.prec(); }
    BigComplex conj() const;

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

    friend BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }

    double re_d() const { return re.to_double(); }
    double im_d() const { return im.to_double(); }
};

// Horner evaluation of a rational polynomial at a complex point, at the
// point's precision.
BigComplex eval_poly(const RatPoly& p, const BigComplex& z);

// sum_i |c_i| * t^i, an evaluation-magnitude scale for residual tests (t >= 0).
BigFloat poly_magnitude(const RatPoly& p, const BigFloat& t);

}  // namespace kan
