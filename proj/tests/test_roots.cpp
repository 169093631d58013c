#include <doctest.h>

#include <cmath>

#include "kan/family.hpp"
#include "kan/roots.hpp"

using namespace kan;

namespace {

// Nearest-point distance between a cloud point and a target, as a double.
double dist_to(const RootCloud& cloud, double re, double im) {
    double best = 1e300;
    for (const auto& z : cloud.points) {
        const BigComplex target = BigComplex::from_doubles(re, im, z.prec());
        best = std::min(best, abs(z - target).to_double());
    }
    return best;
}

double dist_to(const RootCloud& cloud, const BigComplex& target) {
    double best = 1e300;
    for (const auto& z : cloud.points) best = std::min(best, abs(z - target).to_double());
    return best;
}

}  // namespace

TEST_SUITE_BEGIN("roots");

TEST_CASE("quadratic with the sixth roots of unity") {
    // 2x^2 - 2x + 2: roots 1/2 +- i sqrt(3)/2 by the quadratic formula
    const RootCloud cloud = all_roots(RatPoly{Rat(2), Rat(-2), Rat(2)});
    REQUIRE(cloud.points.size() == 2);
    CHECK(cloud.certified);
    const mpfr_prec_t prec = cloud.prec;
    BigComplex omega(BigFloat::from_rat(Rat(1, 2), prec), mul_2si(sqrt(BigFloat::from_long(3, prec)), -1));
    CHECK(dist_to(cloud, omega) < 1e-60);
    CHECK(dist_to(cloud, omega.conj()) < 1e-60);
}

TEST_CASE("cube roots of unity") {
    const RootCloud cloud = all_roots(RatPoly{Rat(-1), Rat(0), Rat(0), Rat(1)});
    REQUIRE(cloud.points.size() == 3);
    CHECK(dist_to(cloud, 1.0, 0.0) < 1e-60);
    const mpfr_prec_t prec = cloud.prec;
    // e^{2 pi i/3} = -1/2 + i sqrt(3)/2
    BigComplex w(BigFloat::from_rat(Rat(-1, 2), prec), mul_2si(sqrt(BigFloat::from_long(3, prec)), -1));
    CHECK(dist_to(cloud, w) < 1e-60);
    CHECK(dist_to(cloud, w.conj()) < 1e-60);
}

TEST_CASE("residual certification on the degree-6 family member") {
    const RootCloud cloud = all_roots(build_k(FamilyParams(Rat(-1), 6)));
    REQUIRE(cloud.points.size() == 6);
    CHECK(cloud.certified);
    for (double r : cloud.rel_residuals) CHECK(r <= std::pow(2.0, -100));
    CHECK(conjugation_mismatch(cloud) < 1e-50);
}

TEST_CASE("multiple roots are repeated in the cloud") {
    const RatPoly omega{Rat(1), Rat(-1), Rat(1)};
    const RatPoly p = omega * omega * RatPoly{Rat(-2), Rat(1)};
    const RootCloud cloud = all_roots(p);
    REQUIRE(cloud.points.size() == 5);
    CHECK(cloud.certified);
    CHECK(dist_to(cloud, 2.0, 0.0) < 1e-60);
    int near_omega = 0;
    for (const auto& z : cloud.points)
        if (std::abs(z.re_d() - 0.5) < 1e-9 && std::abs(std::abs(z.im_d()) - 0.8660254) < 1e-6) ++near_omega;
    CHECK(near_omega == 4);
}

TEST_CASE("precision policy is honored") {
    PrecisionPolicy policy;
    policy.working_bits = 512;
    const RootCloud cloud = all_roots(build_k(FamilyParams(Rat(1, 3), 9)), policy);
    CHECK(cloud.prec == 512);
    CHECK(cloud.points.size() == 8);
    CHECK(cloud.certified);
}

TEST_CASE("degree check and zero rejection") {
    CHECK_THROWS_AS(all_roots(RatPoly()), std::invalid_argument);
    CHECK_THROWS_AS(all_roots(RatPoly::constant(Rat(3))), std::invalid_argument);
}

TEST_SUITE_END();
