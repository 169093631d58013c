#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "kan/curves.hpp"
#include "kan/family.hpp"
#include "kan/svg.hpp"

using namespace kan;

namespace {

RootCloud cloud_of(const RatPoly& p) { return all_roots(p); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("kan_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE_BEGIN("curves");

TEST_CASE("three-curve classification for n = 12") {
    const RootCloud cloud = cloud_of(tilde_k(12));
    REQUIRE(cloud.points.size() == 12);
    const Classification cls = classify_roots(cloud, CurveFamily::three_curve(), 1e-20);
    CHECK(cls.failures == 0);
    REQUIRE(cls.piece_counts.size() == 3);
    CHECK(cls.piece_counts[0] == 4.0);
    CHECK(cls.piece_counts[1] == 4.0);
    CHECK(cls.piece_counts[2] == 4.0);
    CHECK(cls.max_distance <= 1e-20);
}

TEST_CASE("line classification for a = 1/3, n = 8") {
    const RootCloud cloud = cloud_of(build_k(FamilyParams(Rat(1, 3), 8)));
    REQUIRE(cloud.points.size() == 8);
    const Classification cls = classify_roots(cloud, CurveFamily::line(), 1e-20);
    CHECK(cls.failures == 0);
    CHECK(cls.piece_counts[0] == 8.0);
}

TEST_CASE("the common endpoint touches all three pieces") {
    // Feed the sixth root of unity itself: distance zero to every piece, so
    // the assignment is ambiguous and fractional.
    RootCloud cloud;
    cloud.prec = 256;
    BigComplex omega(BigFloat::from_rat(Rat(1, 2), 256), mul_2si(sqrt(BigFloat::from_long(3, 256)), -1));
    cloud.points.push_back(std::move(omega));
    cloud.rel_residuals.push_back(0);
    cloud.abs_residuals.push_back(0);
    const Classification cls = classify_roots(cloud, CurveFamily::three_curve(), 1e-20);
    REQUIRE(cls.assignments.size() == 1);
    CHECK(cls.assignments[0].ambiguous);
    CHECK_FALSE(cls.assignments[0].failed);
    CHECK(cls.piece_counts[0] + cls.piece_counts[1] + cls.piece_counts[2] == doctest::Approx(1.0));
}

TEST_CASE("off-curve points are flagged, not crashed") {
    RootCloud cloud;
    cloud.prec = 128;
    cloud.points.push_back(BigComplex::from_doubles(0.25, 0.1, 128));
    cloud.rel_residuals.push_back(0);
    cloud.abs_residuals.push_back(0);
    const Classification cls = classify_roots(cloud, CurveFamily::three_curve(), 1e-20);
    CHECK(cls.failures == 1);
    CHECK(cls.assignments[0].failed);
}

TEST_CASE("symmetry orbits") {
    const RootCloud c6 = cloud_of(tilde_k(6));
    const SymmetryReport r6 = symmetry_check(c6, 1e-20);
    CHECK(r6.worst_mirror < 1e-40);
    CHECK(r6.worst_inversion < 1e-40);
    REQUIRE(r6.orbits.size() == 1);
    CHECK(r6.orbits[0].size() == 6);
    CHECK(r6.all_orbits_size_six);

    const RootCloud c12 = cloud_of(tilde_k(12));
    const SymmetryReport r12 = symmetry_check(c12, 1e-20);
    CHECK(r12.orbits.size() == 2);
    CHECK(r12.all_orbits_size_six);
}

TEST_CASE("symmetry maps move roots between the pieces as in the figure") {
    // Inversion carries the rays onto the arc |x-1| = 1 through 0 (the
    // inversion of the line Re x = 1/2 is that circle), and the mirror
    // x -> 1-x then carries it onto |x| = 1 through 1.
    const RootCloud cloud = cloud_of(tilde_k(12));
    const Classification cls = classify_roots(cloud, CurveFamily::three_curve(), 1e-20);
    const mpfr_prec_t prec = cloud.prec;
    const BigComplex one(BigFloat::from_long(1, prec), BigFloat::from_long(0, prec));
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        if (cls.assignments[i].piece != 0) continue;  // on the rays
        RootCloud single;
        single.prec = prec;
        single.points.push_back(one / cloud.points[i]);
        single.rel_residuals.push_back(0);
        single.abs_residuals.push_back(0);
        const Classification inv = classify_roots(single, CurveFamily::three_curve(), 1e-18);
        CHECK(inv.assignments[0].piece == 1);  // lands on |x-1| = 1, Re <= 1/2

        RootCloud mirrored;
        mirrored.prec = prec;
        mirrored.points.push_back(one - single.points[0]);
        mirrored.rel_residuals.push_back(0);
        mirrored.abs_residuals.push_back(0);
        const Classification mir = classify_roots(mirrored, CurveFamily::three_curve(), 1e-18);
        CHECK(mir.assignments[0].piece == 2);  // lands on |x| = 1, Re >= 1/2
    }
}

TEST_CASE("csv export shape") {
    TempFile tmp("roots.csv");
    const RootCloud cloud = cloud_of(tilde_k(12));
    const Classification cls = classify_roots(cloud, CurveFamily::three_curve(), 1e-20);
    write_root_csv(tmp.path, cloud, CurveFamily::three_curve(), cls, 99);
    const std::string text = slurp(tmp.path);
    CHECK(text.find("# seed=99") != std::string::npos);
    CHECK(text.find("re,im,residual,piece,distance") != std::string::npos);
    std::size_t rows = 0;
    for (char ch : text)
        if (ch == '\n') ++rows;
    CHECK(rows == cloud.points.size() + 2);  // comment + header + one per root
    CHECK(text.find("L,") != std::string::npos);
    CHECK(text.find("A1,") != std::string::npos);
    CHECK(text.find("A2,") != std::string::npos);
}

TEST_CASE("svg export shape") {
    TempFile tmp("locus.svg");
    SvgOptions opts;
    opts.annotation = "test <annotation>";
    opts.seed = 7;
    write_locus_svg(tmp.path, CurveFamily::three_curve(), {{0.5, 1.2}, {0.3, -0.4}}, opts);
    const std::string text = slurp(tmp.path);
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("seed=7") != std::string::npos);
    CHECK(text.find("stroke-dasharray") != std::string::npos);  // completion circles
    CHECK(text.find("fill='#c03030'") != std::string::npos);    // root markers
    CHECK(text.find("&lt;annotation&gt;") != std::string::npos);
}

TEST_SUITE_END();
