#pragma once

#include <string>

#include "kan/poly.hpp"
#include "kan/rational.hpp"

namespace kan {

// Element u + v*w of Q[w]/(w^2 - w + 1), where w is the primitive sixth root
// of unity. Conjugation is w -> 1 - w, and 2w - 1 represents i*sqrt(3).
struct OmegaRat {
    Rat u;
    Rat v;

    OmegaRat() : u(0), v(0) {}
    OmegaRat(Rat real_part, Rat omega_part) : u(std::move(real_part)), v(std::move(omega_part)) {}
    static OmegaRat omega() { return OmegaRat(Rat(0), Rat(1)); }
    static OmegaRat from_rat(Rat r) { return OmegaRat(std::move(r), Rat(0)); }

    bool is_zero() const { return u == 0 && v == 0; }
    bool is_rational() const { return v == 0; }

    OmegaRat conj() const { return OmegaRat(u + v, -v); }

    friend OmegaRat operator+(const OmegaRat& a, const OmegaRat& b) { return {a.u + b.u, a.v + b.v}; }
    friend OmegaRat operator-(const OmegaRat& a, const OmegaRat& b) { return {a.u - b.u, a.v - b.v}; }
    friend OmegaRat operator*(const OmegaRat& a, const OmegaRat& b) {
        // (u1 + v1 w)(u2 + v2 w) with w^2 = w - 1
        return {a.u * b.u - a.v * b.v, a.u * b.v + a.v * b.u + a.v * b.v};
    }
    friend OmegaRat operator*(const Rat& s, const OmegaRat& a) { return {s * a.u, s * a.v}; }
    friend bool operator==(const OmegaRat& a, const OmegaRat& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const OmegaRat& a, const OmegaRat& b) { return !(a == b); }

    std::string str() const;
};

OmegaRat omega_pow(unsigned long n);

// Exact evaluation of a rational polynomial at w.
OmegaRat eval_at_omega(const RatPoly& p);

}  // namespace kan
