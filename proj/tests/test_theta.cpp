#include <doctest.h>

#include <cmath>

#include "kan/family.hpp"
#include "kan/theta.hpp"

using namespace kan;

TEST_SUITE_BEGIN("theta");

TEST_CASE("guaranteed root-count bound") {
    CHECK(theorem1_bound(Rat(-1), 12) == 2);  // acos(1/2) = pi/3 exactly, 6 - 4
    CHECK(theorem1_bound(Rat(1, 3), 9) == 4);
    CHECK(theorem1_bound(Rat(2), 20) == 1);
    CHECK(theorem1_bound(Rat(2), 3) == 0);  // raw value is negative, clamped
    CHECK(theorem1_bound(Rat(5), 3) == 0);
    CHECK(theorem1_bound(Rat(1, 2), 11) == 5);

    // interval oracle for the a=2, n=20 ceiling: (20/pi) acos(1/4) in (8.39, 8.40)
    mpfr_t x, v, pi;
    mpfr_inits2(256, x, v, pi, (mpfr_ptr)nullptr);
    mpfr_set_d(x, 0.25, MPFR_RNDN);
    mpfr_acos(v, x, MPFR_RNDN);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_mul_si(v, v, 20, MPFR_RNDN);
    mpfr_div(v, v, pi, MPFR_RNDN);
    CHECK(mpfr_cmp_d(v, 8.39) > 0);
    CHECK(mpfr_cmp_d(v, 8.40) < 0);
    mpfr_clears(x, v, pi, (mpfr_ptr)nullptr);
}

TEST_CASE("bracketed zeros for a = -1, n = 6") {
    const auto roots = theta_roots(Rat(-1), 6);
    REQUIRE(roots.size() == 1);  // one sign change between pi/3 and pi/2
    CHECK(roots[0].bracket_index == 2);
    const double t = roots[0].theta.to_double();
    CHECK(t > M_PI / 3);
    CHECK(t < M_PI / 2);
    CHECK(roots[0].mapped_x.re_d() == 0.5);
}

TEST_CASE("quadratic case against the closed form") {
    // K(1/4, 2) = 2x^2 - 2x + 17/16 has roots 1/2 +- (i/2) sqrt(9/8)
    const auto roots = theta_roots(Rat(1, 4), 2);
    REQUIRE(roots.size() == 1);
    const mpfr_prec_t prec = roots[0].theta.prec();
    const BigFloat expected_im = mul_2si(sqrt(BigFloat::from_rat(Rat(9, 8), prec)), -1);
    CHECK(abs(roots[0].mapped_x.im - expected_im).to_double() < 1e-60);
    // tan(theta) = sqrt(1 + 2 a^2) = sqrt(9/8)
    CHECK(abs(tan(roots[0].theta) - sqrt(BigFloat::from_rat(Rat(9, 8), prec))).to_double() < 1e-60);
}

TEST_CASE("theta multiset matches the general solver (dual route)") {
    const Rat a(1, 2);
    const long n = 4;
    const auto troots = theta_roots(a, n);
    REQUIRE(troots.size() == 2);
    const RootCloud cloud = all_roots(build_k(FamilyParams(a, n)));
    REQUIRE(cloud.points.size() == 4);
    for (const auto& tr : troots) {
        double best = 1e300, best_conj = 1e300;
        for (const auto& z : cloud.points) {
            best = std::min(best, abs(z - tr.mapped_x).to_double());
            best_conj = std::min(best_conj, abs(z - tr.mapped_x.conj()).to_double());
        }
        CHECK(best < 1e-25);
        CHECK(best_conj < 1e-25);
    }
}

TEST_CASE("interval coverage and shrinking gaps") {
    const auto rep30 = density_report(Rat(-1), {30});
    REQUIRE(rep30.per_n.size() == 1);
    CHECK(rep30.per_n[0].root_count == 5);  // floor(30/2) - ceil(30/3)
    CHECK(rep30.per_n[0].every_interval_covered);

    const auto rep = density_report(Rat(1, 4), {10, 40});
    REQUIRE(rep.per_n.size() == 2);
    CHECK(rep.per_n[1].max_gap < rep.per_n[0].max_gap);
    CHECK(rep.accumulated_max_gap[1] <= rep.accumulated_max_gap[0]);

    const auto vac = density_report(Rat(2), {3});
    CHECK(vac.per_n[0].vacuous);
    CHECK(vac.per_n[0].root_count == 0);
}

TEST_CASE("count equals the bound across parameters") {
    for (const Rat& a : {Rat(-1), Rat(2), Rat(-3, 2), Rat(5), Rat(1, 3)})
        for (long n : {2L, 5L, 9L, 16L, 23L})
            CHECK(static_cast<long>(theta_roots(a, n).size()) == theorem1_bound(a, n));
}

TEST_SUITE_END();
