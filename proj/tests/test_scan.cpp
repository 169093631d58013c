#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "kan/scan.hpp"

using namespace kan;

namespace {

std::vector<ScanRecord> read_jsonl(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<ScanRecord> out;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(scan_record_from_json(line));
    return out;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("kan_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE_BEGIN("scan");

TEST_CASE("grid enumeration order is deterministic") {
    const auto grid = scan_grid({2, 2, 3});
    // three reduced fractions (1/1, 1/2, 2/1), two signs, n in {2, 3}
    REQUIRE(grid.size() == 12);
    CHECK(grid[0] == std::make_pair(Rat(1), 2L));
    CHECK(grid[1] == std::make_pair(Rat(1), 3L));
    CHECK(grid[2] == std::make_pair(Rat(-1), 2L));
    CHECK(grid[3] == std::make_pair(Rat(-1), 3L));
    CHECK(grid[4] == std::make_pair(Rat(1, 2), 2L));
    CHECK(grid[8] == std::make_pair(Rat(2), 2L));
    // unreduced fractions are absent
    for (const auto& [a, n] : grid) CHECK(int_gcd(a.get_num(), a.get_den()) == 1);
    CHECK_THROWS_AS(scan_grid({0, 1, 5}), std::invalid_argument);
}

TEST_CASE("grid point evaluation and the trivial-skip rule") {
    CHECK(evaluate_grid_point(Rat(-1), 5, 2).verdict == "skipped-trivial");
    CHECK(evaluate_grid_point(Rat(1), 4, 2).verdict == "skipped-trivial");  // same polynomial as a=-1
    CHECK(evaluate_grid_point(Rat(1), 3, 2).verdict == "irreducible");
    const auto rec = evaluate_grid_point(Rat(1, 2), 4, 2);
    CHECK(rec.verdict == "irreducible");
    CHECK(rec.factor_degrees == std::vector<long>{4});
}

TEST_CASE("json round trip") {
    ScanRecord r;
    r.a_num = -3;
    r.a_den = 7;
    r.n = 19;
    r.verdict = "irreducible";
    r.certificate = "ProvenIrreducible-DegreeSet";
    r.factor_degrees = {18};
    r.seed = 0xdeadbeef;
    r.ms = 12;
    const ScanRecord back = scan_record_from_json(scan_record_to_json(r));
    CHECK(back.same_result(r));
    CHECK(back.ms == r.ms);
}

TEST_CASE("small scan: non-skipped records are irreducible") {
    TempFile tmp("scan_small.jsonl");
    const ScanSummary s = run_scan({3, 3, 4}, tmp.path, false, 2, 2);
    CHECK(s.reducible == 0);
    CHECK(s.total == s.irreducible + s.skipped);
    const auto records = read_jsonl(tmp.path);
    CHECK(static_cast<long>(records.size()) == s.total);
    for (const auto& rec : records) {
        if (rec.verdict == "skipped-trivial")
            CHECK(((rec.a_num == -1 && rec.a_den == 1) || (rec.a_num == 1 && rec.a_den == 1 && rec.n % 2 == 0)));
        else
            CHECK(rec.verdict == "irreducible");
    }
}

TEST_CASE("resume reproduces the uninterrupted run") {
    TempFile full("scan_full.jsonl");
    TempFile cut("scan_cut.jsonl");
    run_scan({2, 2, 4}, full.path, false, 2, 2);
    const auto want = read_jsonl(full.path);

    // Truncate: keep the first 5 records plus a partial tail line.
    {
        std::ofstream out(cut.path, std::ios::trunc);
        std::ifstream in(full.path);
        std::string line;
        for (int i = 0; i < 5 && std::getline(in, line); ++i) out << line << "\n";
        out << "{\"a_num\": -1, \"a_de";  // simulated mid-write kill
    }
    const ScanSummary resumed = run_scan({2, 2, 4}, cut.path, true, 2, 2);
    CHECK(resumed.resumed_from == 5);
    const auto got = read_jsonl(cut.path);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].same_result(want[i]));
}

TEST_SUITE_END();
