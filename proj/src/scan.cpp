#include "kan/scan.hpp"

#include <chrono>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "kan/factor.hpp"
#include "kan/family.hpp"
#include "kan/parallel.hpp"

namespace kan {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t point_seed(std::uint64_t base, long num, long den, long n) {
    std::uint64_t h = base;
    h = splitmix64(h ^ static_cast<std::uint64_t>(num + (1ll << 32)));
    h = splitmix64(h ^ static_cast<std::uint64_t>(den));
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    return h;
}

}  // namespace

bool ScanRecord::same_result(const ScanRecord& other) const {
    return a_num == other.a_num && a_den == other.a_den && n == other.n && verdict == other.verdict &&
           certificate == other.certificate && factor_degrees == other.factor_degrees && seed == other.seed;
}

std::string scan_record_to_json(const ScanRecord& r) {
    nlohmann::json j;
    j["a_num"] = r.a_num;
    j["a_den"] = r.a_den;
    j["n"] = r.n;
    j["verdict"] = r.verdict;
    j["certificate"] = r.certificate;
    j["factor_degrees"] = r.factor_degrees;
    j["seed"] = r.seed;
    j["ms"] = r.ms;
    return j.dump();
}

ScanRecord scan_record_from_json(const std::string& line) {
    const nlohmann::json j = nlohmann::json::parse(line);
    ScanRecord r;
    r.a_num = j.at("a_num").get<long>();
    r.a_den = j.at("a_den").get<long>();
    r.n = j.at("n").get<long>();
    r.verdict = j.at("verdict").get<std::string>();
    r.certificate = j.at("certificate").get<std::string>();
    r.factor_degrees = j.at("factor_degrees").get<std::vector<long>>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.ms = j.at("ms").get<long>();
    return r;
}

std::vector<std::pair<Rat, long>> scan_grid(const ScanBounds& bounds) {
    if (bounds.p_max < 1 || bounds.q_max < 1 || bounds.n_max < 2)
        throw std::invalid_argument("scan bounds must satisfy p,q >= 1 and n >= 2");
    std::vector<std::pair<Rat, long>> grid;
    for (long p = 1; p <= bounds.p_max; ++p)
        for (long q = 1; q <= bounds.q_max; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (int sign = 0; sign < 2; ++sign) {
                const Rat a = make_rat(sign == 0 ? p : -p, q);
                for (long n = 2; n <= bounds.n_max; ++n) grid.emplace_back(a, n);
            }
        }
    return grid;
}

ScanRecord evaluate_grid_point(const Rat& a, long n, std::uint64_t base_seed) {
    ScanRecord rec;
    rec.a_num = static_cast<long>(a.get_num().get_si());
    rec.a_den = static_cast<long>(a.get_den().get_si());
    rec.n = n;
    rec.seed = point_seed(base_seed, rec.a_num, rec.a_den, n);
    const auto start = std::chrono::steady_clock::now();

    const bool alias_of_minus_one = (a == -1) || (a == 1 && n % 2 == 0);
    if (alias_of_minus_one) {
        // K with a = -1 (and its even-n alias a = 1) carries the trivial
        // factors; the tilde machinery owns that case.
        rec.verdict = "skipped-trivial";
        rec.certificate = "none";
    } else {
        const RatPoly k = build_k(FamilyParams(a, n));
        const IrreducibilityVerdict v = irreducibility(k, rec.seed);
        if (v.irreducible) {
            rec.verdict = "irreducible";
            rec.certificate = certificate_name(v.certificate);
            rec.factor_degrees = {k.degree()};
        } else {
            rec.verdict = "reducible-with-factors";
            rec.certificate = certificate_name(Certificate::FactoredFull);
            rec.factor_degrees = v.decomposition->factor_degrees();
        }
    }
    const auto stop = std::chrono::steady_clock::now();
    rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return rec;
}

ScanSummary run_scan(const ScanBounds& bounds, const std::string& out_path, bool resume,
                     std::uint64_t base_seed, unsigned threads) {
    const auto grid = scan_grid(bounds);
    const auto t0 = std::chrono::steady_clock::now();

    std::size_t start_index = 0;
    std::string keep;  // complete records already on disk
    if (resume) {
        std::ifstream in(out_path);
        if (in) {
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                ScanRecord rec;
                try {
                    rec = scan_record_from_json(line);
                } catch (const std::exception&) {
                    break;  // partial or corrupt tail line: recompute from here
                }
                if (start_index >= grid.size()) throw std::runtime_error("scan file longer than the grid");
                const auto& [a, n] = grid[start_index];
                if (rec.a_num != a.get_num().get_si() || rec.a_den != a.get_den().get_si() || rec.n != n)
                    throw std::runtime_error("scan file does not match the requested grid/order");
                keep += line;
                keep += '\n';
                ++start_index;
            }
        }
    }

    std::ofstream out;
    if (resume && start_index > 0) {
        // Rewrite the validated prefix, dropping any partial tail.
        out.open(out_path, std::ios::trunc);
        out << keep;
    } else {
        out.open(out_path, std::ios::trunc);
    }
    if (!out) throw std::runtime_error("cannot write " + out_path);

    ScanSummary summary;
    summary.resumed_from = static_cast<long>(start_index);
    summary.total = static_cast<long>(grid.size());

    constexpr std::size_t kBatch = 64;
    std::vector<ScanRecord> batch;
    for (std::size_t base = start_index; base < grid.size(); base += kBatch) {
        const std::size_t count = std::min(kBatch, grid.size() - base);
        batch.assign(count, ScanRecord{});
        parallel_for(0, static_cast<long>(count), threads, [&](long i) {
            const auto& [a, n] = grid[base + static_cast<std::size_t>(i)];
            batch[static_cast<std::size_t>(i)] = evaluate_grid_point(a, n, base_seed);
        });
        for (const auto& rec : batch) {
            out << scan_record_to_json(rec) << "\n";
            out.flush();
        }
    }

    // Tally the whole file so resumed runs report grid-wide counts.
    {
        std::ifstream in(out_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const ScanRecord rec = scan_record_from_json(line);
            if (rec.verdict == "irreducible") ++summary.irreducible;
            else if (rec.verdict == "reducible-with-factors") ++summary.reducible;
            else ++summary.skipped;
        }
    }
    summary.elapsed_seconds =
        std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

}  // namespace kan
