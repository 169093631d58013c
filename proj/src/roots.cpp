#include "kan/roots.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "kan/factor.hpp"

namespace kan {

namespace {

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// ---------- double-precision Aberth pass ----------

void eval_horner_d(const std::vector<double>& c, std::complex<double> z,
                   std::complex<double>& p, std::complex<double>& dp) {
    p = 0.0;
    dp = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
}

bool double_aberth(const std::vector<double>& c, std::vector<std::complex<double>>& z, unsigned max_sweeps) {
    const std::size_t m = c.size() - 1;
    z.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double angle = 2.0 * M_PI * (static_cast<double>(k) + 0.376) / static_cast<double>(m) + 0.55;
        const double radius = 1.0 + 0.0625 * static_cast<double>((k * 7) % 11) / 11.0;
        z[k] = std::polar(radius, angle);
    }
    for (unsigned sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            std::complex<double> p, dp;
            eval_horner_d(c, z[i], p, dp);
            if (std::abs(p) == 0.0) continue;
            if (std::abs(dp) == 0.0) {
                z[i] += std::complex<double>(1e-6, 2e-6) * (1.0 + std::abs(z[i]));
                worst = 1.0;
                continue;
            }
            std::complex<double> newton = p / dp;
            std::complex<double> repulse = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i) continue;
                std::complex<double> diff = z[i] - z[j];
                if (std::abs(diff) < 1e-280) diff = std::complex<double>(1e-12, 1e-12) * double(i + 1);
                repulse += 1.0 / diff;
            }
            std::complex<double> denom = 1.0 - newton * repulse;
            std::complex<double> w = std::abs(denom) < 1e-280 ? newton : newton / denom;
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
                z[i] += std::complex<double>(3e-7, -1e-7) * (1.0 + std::abs(z[i]));
                worst = 1.0;
                continue;
            }
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-14) return true;
    }
    return false;
}

// ---------- MPFR Aberth sweeps ----------

class MpfrAberth {
public:
    MpfrAberth(const RatPoly& poly, mpfr_prec_t prec)
        : prec_(prec), n_(static_cast<std::size_t>(poly.degree())) {
        coeff_.reserve(n_ + 1);
        for (std::size_t i = 0; i <= n_; ++i) coeff_.push_back(BigFloat::from_rat(poly.coeff(i), prec));
        for (auto* t : scratch()) mpfr_init2(*t, prec);
    }
    ~MpfrAberth() {
        for (auto* t : scratch()) mpfr_clear(*t);
    }
    MpfrAberth(const MpfrAberth&) = delete;
    MpfrAberth& operator=(const MpfrAberth&) = delete;

    // Gauss-Seidel Aberth sweeps; true when the largest relative correction
    // drops below 2^-(prec-14).
    bool run(std::vector<BigComplex>& roots, unsigned max_sweeps) {
        const std::size_t m = roots.size();
        std::vector<BigFloat> zr, zi;
        zr.reserve(m);
        zi.reserve(m);
        for (auto& root : roots) {
            BigFloat r(prec_), i(prec_);
            mpfr_set(r.raw(), root.re.raw(), MPFR_RNDN);
            mpfr_set(i.raw(), root.im.raw(), MPFR_RNDN);
            zr.push_back(std::move(r));
            zi.push_back(std::move(i));
        }
        const BigFloat threshold = BigFloat::pow2(-static_cast<long>(prec_ - 14), prec_);
        bool converged = false;
        for (unsigned sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
            mpfr_set_zero(worst, 1);
            for (std::size_t i = 0; i < m; ++i) step(zr, zi, i);
            converged = mpfr_cmp(worst, threshold.raw()) <= 0;
        }
        for (std::size_t i = 0; i < m; ++i) {
            mpfr_set(roots[i].re.raw(), zr[i].raw(), MPFR_RNDN);
            mpfr_set(roots[i].im.raw(), zi[i].raw(), MPFR_RNDN);
        }
        return converged;
    }

private:
    std::array<mpfr_t*, 16> scratch() {
        return {&pr, &pi, &dr, &di, &u1, &u2, &u3, &sr, &si, &nr, &ni, &den, &wr, &wi, &mag, &worst};
    }

    // Evaluate value and derivative at (zr[i], zi[i]) into (pr,pi), (dr,di).
    void eval(const BigFloat& xr, const BigFloat& xi) {
        mpfr_set(pr, coeff_[n_].raw(), MPFR_RNDN);
        mpfr_set_zero(pi, 1);
        mpfr_set_zero(dr, 1);
        mpfr_set_zero(di, 1);
        for (std::size_t i = n_; i-- > 0;) {
            // dp = dp*z + p
            mpfr_mul(u1, dr, xr.raw(), MPFR_RNDN);
            mpfr_mul(u2, di, xi.raw(), MPFR_RNDN);
            mpfr_sub(u1, u1, u2, MPFR_RNDN);
            mpfr_add(u1, u1, pr, MPFR_RNDN);
            mpfr_mul(u2, dr, xi.raw(), MPFR_RNDN);
            mpfr_mul(u3, di, xr.raw(), MPFR_RNDN);
            mpfr_add(u2, u2, u3, MPFR_RNDN);
            mpfr_add(u2, u2, pi, MPFR_RNDN);
            mpfr_swap(dr, u1);
            mpfr_swap(di, u2);
            // p = p*z + c_i
            mpfr_mul(u1, pr, xr.raw(), MPFR_RNDN);
            mpfr_mul(u3, pi, xi.raw(), MPFR_RNDN);
            mpfr_sub(u1, u1, u3, MPFR_RNDN);
            mpfr_add(u1, u1, coeff_[i].raw(), MPFR_RNDN);
            mpfr_mul(u2, pr, xi.raw(), MPFR_RNDN);
            mpfr_mul(u3, pi, xr.raw(), MPFR_RNDN);
            mpfr_add(u2, u2, u3, MPFR_RNDN);
            mpfr_swap(pr, u1);
            mpfr_swap(pi, u2);
        }
    }

    void step(std::vector<BigFloat>& zr, std::vector<BigFloat>& zi, std::size_t i) {
        eval(zr[i], zi[i]);
        if (mpfr_zero_p(pr) && mpfr_zero_p(pi)) return;
        // newton = p / dp
        mpfr_mul(u1, dr, dr, MPFR_RNDN);
        mpfr_mul(u2, di, di, MPFR_RNDN);
        mpfr_add(den, u1, u2, MPFR_RNDN);
        if (mpfr_zero_p(den)) return;  // stationary point; the sweep cap handles it
        mpfr_mul(u1, pr, dr, MPFR_RNDN);
        mpfr_mul(u2, pi, di, MPFR_RNDN);
        mpfr_add(u1, u1, u2, MPFR_RNDN);
        mpfr_div(nr, u1, den, MPFR_RNDN);
        mpfr_mul(u1, pi, dr, MPFR_RNDN);
        mpfr_mul(u2, pr, di, MPFR_RNDN);
        mpfr_sub(u1, u1, u2, MPFR_RNDN);
        mpfr_div(ni, u1, den, MPFR_RNDN);
        // repulsion sum over j != i
        mpfr_set_zero(sr, 1);
        mpfr_set_zero(si, 1);
        for (std::size_t j = 0; j < zr.size(); ++j) {
            if (j == i) continue;
            mpfr_sub(u1, zr[i].raw(), zr[j].raw(), MPFR_RNDN);
            mpfr_sub(u2, zi[i].raw(), zi[j].raw(), MPFR_RNDN);
            mpfr_mul(u3, u1, u1, MPFR_RNDN);
            mpfr_mul(den, u2, u2, MPFR_RNDN);
            mpfr_add(den, den, u3, MPFR_RNDN);
            if (mpfr_zero_p(den)) continue;
            mpfr_div(u1, u1, den, MPFR_RNDN);
            mpfr_div(u2, u2, den, MPFR_RNDN);
            mpfr_add(sr, sr, u1, MPFR_RNDN);
            mpfr_sub(si, si, u2, MPFR_RNDN);
        }
        // denom = 1 - newton*repulsion
        mpfr_mul(u1, nr, sr, MPFR_RNDN);
        mpfr_mul(u2, ni, si, MPFR_RNDN);
        mpfr_sub(u1, u1, u2, MPFR_RNDN);
        mpfr_ui_sub(u1, 1, u1, MPFR_RNDN);
        mpfr_mul(u2, nr, si, MPFR_RNDN);
        mpfr_mul(u3, ni, sr, MPFR_RNDN);
        mpfr_add(u2, u2, u3, MPFR_RNDN);
        mpfr_neg(u2, u2, MPFR_RNDN);
        // w = newton / denom
        mpfr_mul(u3, u1, u1, MPFR_RNDN);
        mpfr_mul(den, u2, u2, MPFR_RNDN);
        mpfr_add(den, den, u3, MPFR_RNDN);
        if (mpfr_zero_p(den)) {
            mpfr_set(wr, nr, MPFR_RNDN);
            mpfr_set(wi, ni, MPFR_RNDN);
        } else {
            mpfr_mul(u3, nr, u1, MPFR_RNDN);
            mpfr_mul(mag, ni, u2, MPFR_RNDN);
            mpfr_add(u3, u3, mag, MPFR_RNDN);
            mpfr_div(wr, u3, den, MPFR_RNDN);
            mpfr_mul(u3, ni, u1, MPFR_RNDN);
            mpfr_mul(mag, nr, u2, MPFR_RNDN);
            mpfr_sub(u3, u3, mag, MPFR_RNDN);
            mpfr_div(wi, u3, den, MPFR_RNDN);
        }
        mpfr_sub(zr[i].raw(), zr[i].raw(), wr, MPFR_RNDN);
        mpfr_sub(zi[i].raw(), zi[i].raw(), wi, MPFR_RNDN);
        // worst = max(worst, |w| / (1 + |z_i|))
        mpfr_hypot(mag, wr, wi, MPFR_RNDN);
        mpfr_hypot(den, zr[i].raw(), zi[i].raw(), MPFR_RNDN);
        mpfr_add_ui(den, den, 1, MPFR_RNDN);
        mpfr_div(mag, mag, den, MPFR_RNDN);
        if (mpfr_cmp(mag, worst) > 0) mpfr_set(worst, mag, MPFR_RNDN);
    }

    mpfr_prec_t prec_;
    std::size_t n_;
    std::vector<BigFloat> coeff_;
    mpfr_t pr, pi, dr, di, u1, u2, u3, sr, si, nr, ni, den, wr, wi, mag, worst;
};

// ---------- scaling ----------

double log2_abs(const Int& v) {
    if (v == 0) return -1e300;
    return static_cast<double>(mpz_sizeinbase(v.get_mpz_t(), 2)) - 0.5;
}

// Exponent e with all roots inside |x| <= 2^e (min of Cauchy and Fujiwara).
long scale_exponent(const IntPoly& f) {
    const long m = f.degree();
    const double lead = log2_abs(f.leading());
    double max_rel = -1e300;
    double fuji = -1e300;
    for (long i = 0; i < m; ++i) {
        if (f.coeff(static_cast<std::size_t>(i)) == 0) continue;
        const double rel = log2_abs(f.coeff(static_cast<std::size_t>(i))) - lead;
        max_rel = std::max(max_rel, rel);
        fuji = std::max(fuji, rel / static_cast<double>(m - i));
    }
    if (max_rel < -1e200) return 0;  // f = c*x^m
    const double cauchy_log = max_rel > 50 ? max_rel : std::log2(1.0 + std::pow(2.0, max_rel));
    const double fuji_log = 1.0 + fuji;
    return static_cast<long>(std::ceil(std::min(cauchy_log, fuji_log))) + 1;
}

// y-space polynomial g(y) = f(2^e y), exact.
RatPoly rescale_poly(const IntPoly& f, long e) {
    std::vector<Rat> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rat v(f.coeffs()[i]);
        const long shift = e * static_cast<long>(i);
        if (shift >= 0)
            mpq_mul_2exp(v.get_mpq_t(), v.get_mpq_t(), static_cast<unsigned long>(shift));
        else
            mpq_div_2exp(v.get_mpq_t(), v.get_mpq_t(), static_cast<unsigned long>(-shift));
        c[i] = std::move(v);
    }
    return RatPoly(std::move(c));
}

std::vector<double> to_scaled_doubles(const RatPoly& g) {
    long max_exp = LONG_MIN;
    for (const auto& c : g.coeffs()) {
        if (c == 0) continue;
        BigFloat v = BigFloat::from_rat(c, 64);
        max_exp = std::max(max_exp, static_cast<long>(mpfr_get_exp(v.raw())));
    }
    std::vector<double> out(g.coeffs().size(), 0.0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (g.coeffs()[i] == 0) continue;
        BigFloat v = BigFloat::from_rat(g.coeffs()[i], 64);
        out[i] = mul_2si(v, -max_exp).to_double();
    }
    return out;
}

std::vector<BigComplex> solve_squarefree(const IntPoly& f, mpfr_prec_t target, unsigned attempt) {
    const long m = f.degree();
    if (m == 1) {
        const Rat root = Rat(-f.coeff(0)) / Rat(f.coeff(1));
        BigComplex z(target);
        mpfr_set_q(z.re.raw(), root.get_mpq_t(), MPFR_RNDN);
        return {std::move(z)};
    }

    const long e = scale_exponent(f);
    const RatPoly g = rescale_poly(f, e);
    const std::vector<double> gd = to_scaled_doubles(g);

    std::vector<std::complex<double>> seeds;
    const bool double_ok = double_aberth(gd, seeds, 600u << attempt);

    const mpfr_prec_t first = static_cast<mpfr_prec_t>(128) << attempt;
    std::vector<BigComplex> roots;
    roots.reserve(static_cast<std::size_t>(m));
    if (double_ok) {
        for (auto s : seeds) roots.push_back(BigComplex::from_doubles(s.real(), s.imag(), first));
    } else {
        for (long k = 0; k < m; ++k) {
            const double angle = 2.0 * M_PI * (static_cast<double>(k) + 0.29) / static_cast<double>(m) + 0.17;
            roots.push_back(BigComplex::from_doubles(1.05 * std::cos(angle), 1.05 * std::sin(angle), first));
        }
    }

    // Precision ladder in y-space.
    mpfr_prec_t prec = first;
    while (true) {
        MpfrAberth engine(g, prec);
        const unsigned cap = double_ok ? 48 : 1600;
        if (!engine.run(roots, cap))
            throw ConvergenceError("Aberth stagnated at " + std::to_string(prec) + " bits");
        if (prec >= target) break;
        prec = std::min<mpfr_prec_t>(prec * 2, target);
        for (auto& z : roots) {
            BigComplex up(prec);
            mpfr_set(up.re.raw(), z.re.raw(), MPFR_RNDN);
            mpfr_set(up.im.raw(), z.im.raw(), MPFR_RNDN);
            z = std::move(up);
        }
    }

    // Distinctness guard: collapsed approximations mean a lost root.
    const BigFloat min_sep = BigFloat::pow2(-static_cast<long>(target / 4), target);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            BigFloat d = abs(roots[i] - roots[j]);
            if (d < min_sep) throw ConvergenceError("two approximations collapsed onto one root");
        }

    // Back to x-space (exact power-of-two scaling).
    for (auto& z : roots) {
        mpfr_mul_2si(z.re.raw(), z.re.raw(), e, MPFR_RNDN);
        mpfr_mul_2si(z.im.raw(), z.im.raw(), e, MPFR_RNDN);
    }
    return roots;
}

}  // namespace

RootCloud all_roots(const RatPoly& p, const PrecisionPolicy& policy) {
    if (p.is_zero() || p.degree() < 1) throw std::invalid_argument("root finding needs degree >= 1");
    const IntPoly prim = primitive_scaling(p);
    const auto parts = squarefree_decomposition_z(prim);

    std::string last_error;
    for (unsigned attempt = 0; attempt < 4; ++attempt) {
        const mpfr_prec_t working = policy.working_bits << attempt;
        try {
            RootCloud cloud;
            cloud.prec = working;
            for (const auto& [part, mult] : parts) {
                auto roots = solve_squarefree(part, working, attempt);
                for (auto& r : roots)
                    for (unsigned k = 0; k < mult; ++k) cloud.points.push_back(r);
            }
            if (cloud.points.size() != static_cast<std::size_t>(p.degree()))
                throw ConvergenceError("root count mismatch");

            // Certify residuals at doubled precision against the input.
            const mpfr_prec_t certify = working * 2;
            bool ok = true;
            cloud.rel_residuals.reserve(cloud.points.size());
            cloud.abs_residuals.reserve(cloud.points.size());
            for (const auto& z : cloud.points) {
                BigComplex z2(certify);
                mpfr_set(z2.re.raw(), z.re.raw(), MPFR_RNDN);
                mpfr_set(z2.im.raw(), z.im.raw(), MPFR_RNDN);
                const BigFloat val = abs(eval_poly(p, z2));
                const BigFloat scale = poly_magnitude(p, abs(z2));
                const BigFloat bound = mul_2si(scale, policy.residual_log2);
                if (!(val <= bound)) ok = false;
                cloud.abs_residuals.push_back(val.to_double());
                cloud.rel_residuals.push_back((val / scale).to_double());
            }
            if (!ok) {
                last_error = "residual certificate failed at " + std::to_string(working) + " bits";
                continue;
            }
            cloud.certified = true;
            return cloud;
        } catch (const ConvergenceError& err) {
            last_error = err.what();
        }
    }
    throw std::runtime_error("root finding failed after precision escalation: " + last_error);
}

double conjugation_mismatch(const RootCloud& cloud) {
    double worst = 0.0;
    for (const auto& z : cloud.points) {
        const BigComplex target = z.conj();
        BigFloat best(z.prec());
        bool first = true;
        for (const auto& w : cloud.points) {
            BigFloat d = abs(w - target);
            if (first || d < best) {
                best = d;
                first = false;
            }
        }
        worst = std::max(worst, best.to_double());
    }
    return worst;
}

}  // namespace kan
