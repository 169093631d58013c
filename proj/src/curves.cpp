#include "kan/curves.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace kan {

namespace {

struct PieceDistances {
    // Distances from one point to each piece of the family, as doubles.
    std::vector<double> d;
};

double to_double(const BigFloat& v) { return v.to_double(); }

// Distance to the vertical line Re x = 1/2.
BigFloat dist_line(const BigComplex& z) {
    BigFloat half = BigFloat::from_double(0.5, z.prec());
    return abs(z.re - half);
}

// Distance to the two rays {Re = 1/2, |Im| >= sqrt(3)/2}.
BigFloat dist_rays(const BigComplex& z) {
    const mpfr_prec_t prec = z.prec();
    const BigFloat half = BigFloat::from_double(0.5, prec);
    const BigFloat root3_half = mul_2si(sqrt(BigFloat::from_long(3, prec)), -1);
    BigFloat dx = z.re - half;
    BigFloat ay = abs(z.im);
    if (ay >= root3_half) return abs(dx);
    return hypot(dx, ay - root3_half);
}

// Distance to an arc of the unit circle centered at (cx, 0). keep_left: the
// arc is the part with Re <= 1/2 (center 1); otherwise Re >= 1/2 (center 0).
BigFloat dist_arc(const BigComplex& z, long cx, bool keep_left) {
    const mpfr_prec_t prec = z.prec();
    const BigFloat cxf = BigFloat::from_long(cx, prec);
    BigFloat dx = z.re - cxf;
    BigFloat r = hypot(dx, z.im);
    const BigFloat one = BigFloat::from_long(1, prec);
    const BigFloat half = BigFloat::from_double(0.5, prec);
    bool endpoint_branch = false;
    if (r.is_zero()) {
        endpoint_branch = true;
    } else {
        // Projection (cx + dx/r, im/r) must satisfy the Re constraint.
        BigFloat proj_re = cxf + dx / r;
        if (keep_left ? !(proj_re <= half) : !(proj_re >= half)) endpoint_branch = true;
    }
    if (!endpoint_branch) return abs(r - one);
    const BigFloat root3_half = mul_2si(sqrt(BigFloat::from_long(3, prec)), -1);
    BigFloat up = hypot(z.re - half, z.im - root3_half);
    BigFloat down = hypot(z.re - half, z.im + root3_half);
    return up < down ? up : down;
}

PieceDistances distances(const BigComplex& z, const CurveFamily& family) {
    PieceDistances out;
    if (family.kind == CurveFamily::Kind::Line) {
        out.d.push_back(to_double(dist_line(z)));
    } else {
        out.d.push_back(to_double(dist_rays(z)));
        out.d.push_back(to_double(dist_arc(z, 1, true)));
        out.d.push_back(to_double(dist_arc(z, 0, false)));
    }
    return out;
}

struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Classification classify_roots(const RootCloud& cloud, const CurveFamily& family, double curve_tol) {
    Classification out;
    out.piece_counts.assign(family.piece_names().size(), 0.0);
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        const PieceDistances pd = distances(cloud.points[i], family);
        RootAssignment asg;
        asg.root = i;
        int best = 0;
        for (int k = 1; k < static_cast<int>(pd.d.size()); ++k)
            if (pd.d[static_cast<std::size_t>(k)] < pd.d[static_cast<std::size_t>(best)]) best = k;
        asg.piece = best;
        asg.distance = pd.d[static_cast<std::size_t>(best)];
        std::vector<int> close;
        for (int k = 0; k < static_cast<int>(pd.d.size()); ++k)
            if (pd.d[static_cast<std::size_t>(k)] <= curve_tol) close.push_back(k);
        if (asg.distance > curve_tol) {
            asg.failed = true;
            asg.piece = -1;
            ++out.failures;
        } else if (close.size() > 1) {
            asg.ambiguous = true;
            for (int k : close) out.piece_counts[static_cast<std::size_t>(k)] += 1.0 / close.size();
        } else {
            out.piece_counts[static_cast<std::size_t>(best)] += 1.0;
        }
        if (!asg.failed) out.max_distance = std::max(out.max_distance, asg.distance);
        out.assignments.push_back(asg);
    }
    return out;
}

SymmetryReport symmetry_check(const RootCloud& cloud, double tol) {
    SymmetryReport rep;
    const std::size_t m = cloud.points.size();
    Dsu dsu(m);
    auto nearest = [&](const BigComplex& target) {
        std::size_t best = 0;
        BigFloat best_d(target.prec());
        bool first = true;
        for (std::size_t j = 0; j < m; ++j) {
            BigFloat d = abs(cloud.points[j] - target);
            if (first || d < best_d) {
                best_d = d;
                best = j;
                first = false;
            }
        }
        return std::make_pair(best, best_d.to_double());
    };
    const mpfr_prec_t prec = m ? cloud.points[0].prec() : 64;
    const BigComplex one(BigFloat::from_long(1, prec), BigFloat::from_long(0, prec));
    for (std::size_t i = 0; i < m; ++i) {
        const BigComplex mirror = one - cloud.points[i];
        auto [jm, dm] = nearest(mirror);
        rep.worst_mirror = std::max(rep.worst_mirror, dm);
        if (dm <= tol) dsu.unite(i, jm);
        const BigComplex inv = one / cloud.points[i];
        auto [ji, di] = nearest(inv);
        rep.worst_inversion = std::max(rep.worst_inversion, di);
        if (di <= tol) dsu.unite(i, ji);
    }
    std::vector<std::vector<std::size_t>> groups(m);
    for (std::size_t i = 0; i < m; ++i) groups[dsu.find(i)].push_back(i);
    for (auto& g : groups)
        if (!g.empty()) rep.orbits.push_back(std::move(g));
    rep.all_orbits_size_six =
        std::all_of(rep.orbits.begin(), rep.orbits.end(), [](const auto& g) { return g.size() == 6; });
    return rep;
}

void write_root_csv(const std::string& path, const RootCloud& cloud,
                    const std::optional<CurveFamily>& family,
                    const std::optional<Classification>& classification,
                    std::uint64_t seed) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    const int digits = static_cast<int>(static_cast<double>(cloud.prec) * 0.30103) + 2;
    out << "# seed=" << seed << " precision_bits=" << cloud.prec << "\n";
    out << "re,im,residual,piece,distance\n";
    const auto names = family ? family->piece_names() : std::vector<std::string>{};
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        out << cloud.points[i].re.str(digits) << "," << cloud.points[i].im.str(digits) << ",";
        std::ostringstream res;
        res.precision(6);
        res << cloud.abs_residuals[i];
        out << res.str() << ",";
        if (!classification) {
            out << "none,";
        } else {
            const auto& asg = classification->assignments[i];
            if (asg.failed)
                out << "off-curve,";
            else
                out << names[static_cast<std::size_t>(asg.piece)] << ",";
            std::ostringstream dist;
            dist.precision(6);
            dist << asg.distance;
            out << dist.str();
        }
        out << "\n";
    }
}

}  // namespace kan
