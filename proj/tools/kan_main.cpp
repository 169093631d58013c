#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "kan/curves.hpp"
#include "kan/factor.hpp"
#include "kan/family.hpp"
#include "kan/parallel.hpp"
#include "kan/scan.hpp"
#include "kan/svg.hpp"
#include "kan/theta.hpp"
#include "kan/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitInternal = 3;

struct Config {
    long bits = 256;
    double curve_tol = 1e-20;
    long pmax = 20;
    long qmax = 20;
    long nmax = 30;
    std::string out;
    std::uint64_t seed = 2;
    unsigned threads = 0;
};

// The optional config file only provides defaults; flags override.
void load_config(int argc, char** argv, Config& cfg) {
    std::string path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") path = argv[i + 1];
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("bits")) cfg.bits = j["bits"].get<long>();
    if (j.contains("curve_tol")) cfg.curve_tol = j["curve_tol"].get<double>();
    if (j.contains("pmax")) cfg.pmax = j["pmax"].get<long>();
    if (j.contains("qmax")) cfg.qmax = j["qmax"].get<long>();
    if (j.contains("nmax")) cfg.nmax = j["nmax"].get<long>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<unsigned>();
}

std::string format_factorization(const kan::FactorDecomposition& dec) {
    std::ostringstream out;
    out << kan::rat_to_string(dec.constant);
    for (const auto& f : dec.factors) {
        out << " * (" << f.poly.str() << ")";
        if (f.multiplicity > 1) out << "^" << f.multiplicity;
    }
    return out.str();
}

int cmd_show(const kan::Rat& a, long n, std::uint64_t seed) {
    using namespace kan;
    const FamilyParams params(a, n);
    const RatPoly k = build_k(params);
    std::cout << "K(" << rat_to_string(a) << ", " << n << ") = " << k.str() << "\n";
    std::cout << "  degree: " << k.degree() << "\n";
    std::cout << "  coefficients: " << poly_to_bracket_string(k) << "\n";

    const FactorDecomposition dec = factor_over_q(k, seed);
    std::cout << "  factorization: " << format_factorization(dec) << "\n";
    const bool irreducible = dec.factors.size() == 1 && dec.factors[0].multiplicity == 1;
    std::cout << "  irreducible over Q: " << (irreducible ? "yes" : "no") << "  ["
              << certificate_name(dec.certificate) << "]\n";

    const SquarefreeReport sq = squarefree_check(params);
    std::cout << "  squarefree: " << (sq.squarefree ? "yes" : "no");
    if (!sq.squarefree) std::cout << "  (gcd with derivative: " << sq.witness.str() << ")";
    std::cout << "\n";

    const GcdReport gr = gcd_analysis(params);
    std::cout << "  gcd analysis: |a|^(n/(n-1)) < 1/2 " << (gr.predicted_trivial ? "holds" : "fails")
              << ", gcd(K, K') = " << gr.actual_gcd.str()
              << (gr.divides_x_pow_plus_an ? ", divides x^(n-1) + a^n" : "") << "\n";

    if (a == -1) {
        const TrivialFactorReport tf = trivial_factors(n);
        std::cout << "  trivial factors: x^" << tf.mult_zero << " (x-1)^" << tf.mult_one << " (x^2-x+1)^"
                  << tf.mult_omega << ", d_" << n << " = " << tf.tilde_degree << "\n";
        std::cout << "  tilde K = " << tilde_k(n).str() << "\n";
    }
    return kExitOk;
}

int cmd_scan(const Config& cfg, bool resume) {
    using namespace kan;
    if (cfg.out.empty()) throw std::invalid_argument("scan requires --out <path>");
    const ScanSummary s =
        run_scan({cfg.pmax, cfg.qmax, cfg.nmax}, cfg.out, resume, cfg.seed,
                 cfg.threads ? cfg.threads : default_thread_count());
    std::cout << "scan: " << s.total << " grid points, " << s.irreducible << " irreducible, " << s.reducible
              << " reducible, " << s.skipped << " skipped";
    if (s.resumed_from > 0) std::cout << " (resumed after " << s.resumed_from << ")";
    std::cout << ", " << s.elapsed_seconds << " s -> " << cfg.out << "\n";
    return s.reducible == 0 ? kExitOk : kExitVerification;
}

int cmd_locus(const kan::Rat& a, long n, const std::string& svg_path, const std::string& csv_path,
              const Config& cfg) {
    using namespace kan;
    const FamilyParams params(a, n);
    PrecisionPolicy policy;
    policy.working_bits = cfg.bits;
    policy.curve_tol = cfg.curve_tol;

    RatPoly poly;
    std::optional<CurveFamily> family;
    std::string annotation;
    if (a == -1) {
        poly = tilde_k(n);
        family = CurveFamily::three_curve();
        annotation = "a=-1, n=" + std::to_string(n) + ", d_n=" + std::to_string(tilde_degree_formula(n)) +
                     " (expect d_n/3 per piece)";
    } else if (rat_abs(a) <= Rat(1, 2)) {
        poly = build_k(params);
        family = CurveFamily::line();
        annotation = "a=" + rat_to_string(a) + ", n=" + std::to_string(n) + ": all roots on Re x = 1/2";
    } else {
        poly = build_k(params);
        annotation = "a=" + rat_to_string(a) + ", n=" + std::to_string(n) + ": >= " +
                     std::to_string(theorem1_bound(a, n)) + " line roots guaranteed";
    }

    if (poly.degree() < 1) {
        std::cout << "nothing to localize: the polynomial is constant (" << poly.str() << ")\n";
        if (!svg_path.empty()) write_locus_svg(svg_path, family, {}, {.annotation = annotation, .seed = cfg.seed});
        return kExitOk;
    }

    const RootCloud cloud = all_roots(poly, policy);
    std::optional<Classification> cls;
    if (family) cls = classify_roots(cloud, *family, policy.curve_tol);

    if (!csv_path.empty()) write_root_csv(csv_path, cloud, family, cls, cfg.seed);
    if (!svg_path.empty()) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(cloud.points.size());
        for (const auto& z : cloud.points) pts.emplace_back(z.re_d(), z.im_d());
        SvgOptions opts;
        opts.annotation = annotation;
        opts.seed = cfg.seed;
        write_locus_svg(svg_path, family, pts, opts);
    }

    std::cout << cloud.points.size() << " roots at " << cloud.prec << " bits";
    if (cls) {
        std::cout << "; piece counts:";
        const auto names = family->piece_names();
        for (std::size_t i = 0; i < names.size(); ++i) std::cout << " " << names[i] << "=" << cls->piece_counts[i];
        std::cout << "; max distance " << cls->max_distance << "; failures " << cls->failures;
    }
    std::cout << "\n";
    if (cls && cls->failures > 0) {
        std::cerr << "localization failure: " << cls->failures << " root(s) off-curve (marked in CSV)\n";
        return kExitVerification;
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, const Config& cfg, std::optional<long> nmax_override) {
    using namespace kan;
    VerifyOptions opts;
    opts.nmax = nmax_override;
    opts.seed = cfg.seed;
    opts.threads = cfg.threads;
    std::vector<int> ids;
    if (suite == "all") {
        for (int i = 1; i <= 11; ++i) ids.push_back(i);
    } else {
        const int idx = suite_index(suite);
        if (idx < 0) throw std::invalid_argument("unknown suite '" + suite + "' (see --help for the list)");
        ids.push_back(idx + 1);
    }
    bool all_pass = true;
    for (int id : ids) {
        const CriterionResult r = run_criterion(id, opts);
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << " " << r.name << ": " << r.detail
                  << " (" << r.seconds << " s)\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kan: exact and certified-numeric study of the family x^n + (1-x)^n + a^n"};
    app.require_subcommand(1);

    Config cfg;
    try {
        load_config(argc, argv, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file with defaults (flags override)");

    std::string a_text = "-1";
    long n = 6;

    auto* show = app.add_subcommand("show", "print K(a,n) with its exact factorization and reports");
    show->add_option("-a", a_text, "rational parameter, p/q or integer")->required();
    show->add_option("-n", n, "exponent n >= 2")->required();

    auto* scan = app.add_subcommand("scan", "irreducibility scan over a = +-p/q, resumable JSONL output");
    scan->add_option("--pmax", cfg.pmax, "numerator bound");
    scan->add_option("--qmax", cfg.qmax, "denominator bound");
    scan->add_option("--nmax", cfg.nmax, "exponent bound");
    scan->add_option("--out", cfg.out, "output JSONL path")->required();
    bool resume = false;
    scan->add_flag("--resume", resume, "continue after the last complete record in --out");
    scan->add_option("--seed", cfg.seed, "base RNG seed (recorded per record)");
    scan->add_option("--threads", cfg.threads, "worker threads (0 = auto)");

    auto* locus = app.add_subcommand("locus", "compute certified roots, classify against the locus, emit CSV/SVG");
    locus->add_option("-a", a_text, "rational parameter")->required();
    locus->add_option("-n", n, "exponent n >= 2")->required();
    std::string svg_path, csv_path;
    locus->add_option("--svg", svg_path, "SVG output path");
    locus->add_option("--csv", csv_path, "CSV output path");
    locus->add_option("--bits", cfg.bits, "working precision in bits");
    locus->add_option("--tol", cfg.curve_tol, "curve membership tolerance");
    locus->add_option("--seed", cfg.seed, "seed recorded in output artifacts");

    auto* verify = app.add_subcommand("verify", "run an acceptance suite");
    std::string suite;
    std::string suite_help = "suite name: all";
    for (const auto& name : kan::suite_names()) suite_help += ", " + name;
    verify->add_option("suite", suite, suite_help)->required();
    std::optional<long> nmax_override;
    verify->add_option("--nmax", nmax_override, "override the suite's main n range");
    verify->add_option("--seed", cfg.seed, "RNG seed for randomized checks");
    verify->add_option("--threads", cfg.threads, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (show->parsed()) return cmd_show(kan::parse_rat(a_text), n, cfg.seed);
        if (scan->parsed()) return cmd_scan(cfg, resume);
        if (locus->parsed()) return cmd_locus(kan::parse_rat(a_text), n, svg_path, csv_path, cfg);
        if (verify->parsed()) return cmd_verify(suite, cfg, nmax_override);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
