#include "kan/theta.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kan/family.hpp"

namespace kan {

namespace {

// ceil((n/pi) * acos(1/(2|a|))) for |a| > 1/2, certified by interval
// refinement. |a| = 1 must be handled by the caller (acos(1/2) = pi/3 is the
// one rational-multiple-of-pi case, where refinement could not terminate).
long certified_ceil_acos_multiple(const Rat& abs_a, long n) {
    const Rat x = Rat(1) / (2 * abs_a);  // in (0, 1)
    for (mpfr_prec_t prec = 128; prec <= 1 << 16; prec *= 2) {
        mpfr_t xlo, xhi, alo, ahi, pilo, pihi, vlo, vhi;
        mpfr_inits2(prec, xlo, xhi, alo, ahi, pilo, pihi, vlo, vhi, (mpfr_ptr)nullptr);
        mpfr_set_q(xlo, x.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(xhi, x.get_mpq_t(), MPFR_RNDU);
        mpfr_acos(alo, xhi, MPFR_RNDD);  // acos decreases
        mpfr_acos(ahi, xlo, MPFR_RNDU);
        mpfr_const_pi(pilo, MPFR_RNDD);
        mpfr_const_pi(pihi, MPFR_RNDU);
        mpfr_mul_si(vlo, alo, n, MPFR_RNDD);
        mpfr_div(vlo, vlo, pihi, MPFR_RNDD);
        mpfr_mul_si(vhi, ahi, n, MPFR_RNDU);
        mpfr_div(vhi, vhi, pilo, MPFR_RNDU);
        mpfr_ceil(vlo, vlo);
        mpfr_ceil(vhi, vhi);
        const bool agree = mpfr_cmp(vlo, vhi) == 0;
        long result = 0;
        if (agree) result = mpfr_get_si(vlo, MPFR_RNDN);
        mpfr_clears(xlo, xhi, alo, ahi, pilo, pihi, vlo, vhi, (mpfr_ptr)nullptr);
        if (agree) return result;
    }
    throw std::logic_error("interval ceiling failed to converge (value should be irrational)");
}

// First grid index k with k*pi/n inside the closed domain.
long grid_index_low(const Rat& a, long n) {
    const Rat abs_a = rat_abs(a);
    if (abs_a <= Rat(1, 2)) return 0;
    if (abs_a == 1) return (n + 2) / 3;  // exact ceil(n/3); acos(1/2) = pi/3
    return certified_ceil_acos_multiple(abs_a, n);
}

}  // namespace

long theorem1_bound(const Rat& a, long n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    const long raw = n / 2 - grid_index_low(a, n);
    return std::max(0L, raw);
}

namespace {

// f(t) = 2 cos(nt) + (2 a cos t)^n at the working precision.
class ThetaFunction {
public:
    ThetaFunction(const Rat& a, long n, mpfr_prec_t prec) : n_(n), prec_(prec), two_a_(BigFloat::from_rat(2 * a, prec)) {}

    BigFloat operator()(const BigFloat& theta) const {
        BigFloat nt = theta * BigFloat::from_long(n_, prec_);
        BigFloat lead = cos(nt);
        mpfr_mul_2si(lead.raw(), lead.raw(), 1, MPFR_RNDN);
        BigFloat base = cos(theta) * two_a_;
        return lead + pow_si(base, n_);
    }

private:
    long n_;
    mpfr_prec_t prec_;
    BigFloat two_a_;
};

}  // namespace

std::vector<ThetaRoot> theta_roots(const Rat& a, long n, const PrecisionPolicy& policy) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    const mpfr_prec_t prec = policy.working_bits + 32;
    const long k_lo = grid_index_low(a, n);
    const long k_hi = n / 2;
    std::vector<ThetaRoot> out;
    if (k_lo >= k_hi) return out;

    const ThetaFunction f(a, n, prec);
    const BigFloat pi = BigFloat::pi(prec);
    const BigFloat n_f = BigFloat::from_long(n, prec);
    const RatPoly k_poly = build_k(FamilyParams(a, n));

    auto grid_point = [&](long k) { return pi * BigFloat::from_long(k, prec) / n_f; };
    auto expected_sign = [](long k) { return k % 2 == 0 ? 1 : -1; };

    // Grid signs follow cos(k pi) exactly; anything else falsifies the
    // bracketing argument and must stop the run.
    std::vector<BigFloat> grid;
    std::vector<BigFloat> values;
    for (long k = k_lo; k <= k_hi; ++k) {
        grid.push_back(grid_point(k));
        values.push_back(f(grid.back()));
        const BigFloat& v = values.back();
        if (v.sign() != expected_sign(k) || !(abs(v) > BigFloat::from_double(0.5, prec))) {
            std::ostringstream msg;
            msg << "theorem violation: sign assumption fails at grid point k=" << k << ", n=" << n;
            throw std::runtime_error(msg.str());
        }
    }

    const long bisect_iters = static_cast<long>(policy.working_bits) + 8;
    for (long k = k_lo; k < k_hi; ++k) {
        BigFloat lo = grid[static_cast<std::size_t>(k - k_lo)];
        BigFloat hi = grid[static_cast<std::size_t>(k - k_lo) + 1];
        int sign_lo = expected_sign(k);
        for (long it = 0; it < bisect_iters; ++it) {
            BigFloat mid = mul_2si(lo + hi, -1);
            const int s = f(mid).sign();
            if (s == 0) {
                lo = mid;
                hi = mid;
                break;
            }
            if (s == sign_lo)
                lo = mid;
            else
                hi = mid;
        }
        ThetaRoot root{mul_2si(lo + hi, -1), k, BigComplex(prec)};
        mpfr_set_d(root.mapped_x.re.raw(), 0.5, MPFR_RNDN);
        root.mapped_x.im = mul_2si(tan(root.theta), -1);

        // Residual of the mapped point against K, relative to the magnitude scale.
        const BigFloat val = abs(eval_poly(k_poly, root.mapped_x));
        const BigFloat scale = poly_magnitude(k_poly, abs(root.mapped_x));
        if (!(val <= mul_2si(scale, policy.residual_log2))) {
            std::ostringstream msg;
            msg << "theta root residual not certified at k=" << k << ", n=" << n;
            throw std::runtime_error(msg.str());
        }
        out.push_back(std::move(root));
    }
    return out;
}

DensityReport density_report(const Rat& a, const std::vector<long>& n_list, const PrecisionPolicy& policy) {
    DensityReport report;
    std::vector<double> accumulated;

    // Domain edges as doubles for gap statistics (plenty for reporting).
    double theta_min_d = 0.0;
    const Rat abs_a = rat_abs(a);
    if (abs_a > Rat(1, 2)) {
        const Rat x = Rat(1) / (2 * abs_a);
        BigFloat xf = BigFloat::from_rat(x, 128);
        theta_min_d = acos(xf).to_double();
    }
    const double theta_max_d = std::acos(0.0);  // pi/2

    for (long n : n_list) {
        DensityEntry entry;
        entry.n = n;
        auto roots = theta_roots(a, n, policy);
        entry.root_count = static_cast<long>(roots.size());
        entry.vacuous = roots.empty();
        // Bisection yields one zero per grid interval inside the domain by
        // construction; verify each landed strictly inside its bracket.
        entry.every_interval_covered = true;
        const double pi_d = 2.0 * theta_max_d;
        for (const auto& r : roots) {
            const double lo = pi_d * static_cast<double>(r.bracket_index) / static_cast<double>(n);
            const double hi = pi_d * static_cast<double>(r.bracket_index + 1) / static_cast<double>(n);
            const double t = r.theta.to_double();
            if (!(t >= lo && t <= hi)) entry.every_interval_covered = false;
        }
        std::vector<double> thetas;
        thetas.reserve(roots.size());
        for (const auto& r : roots) thetas.push_back(r.theta.to_double());
        std::sort(thetas.begin(), thetas.end());
        if (!thetas.empty()) {
            double gap = thetas.front() - theta_min_d;
            for (std::size_t i = 1; i < thetas.size(); ++i) gap = std::max(gap, thetas[i] - thetas[i - 1]);
            gap = std::max(gap, theta_max_d - thetas.back());
            entry.max_gap = gap;
        }
        report.per_n.push_back(entry);

        accumulated.insert(accumulated.end(), thetas.begin(), thetas.end());
        std::sort(accumulated.begin(), accumulated.end());
        double gap = 0.0;
        if (!accumulated.empty()) {
            gap = accumulated.front() - theta_min_d;
            for (std::size_t i = 1; i < accumulated.size(); ++i) gap = std::max(gap, accumulated[i] - accumulated[i - 1]);
            gap = std::max(gap, theta_max_d - accumulated.back());
        }
        report.accumulated_max_gap.push_back(gap);
    }
    return report;
}

}  // namespace kan
