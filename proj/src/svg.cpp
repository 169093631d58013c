#include "kan/svg.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace kan {

namespace {

struct Mapper {
    const SvgOptions& o;
    double scale;
    double height;
    double sx(double x) const { return (x - o.xmin) * scale; }
    double sy(double y) const { return (o.ymax - y) * scale; }
};

std::string pt(double v) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << v;
    return out.str();
}

void polyline(std::ostream& out, const Mapper& m, const std::vector<std::pair<double, double>>& pts,
              const std::string& style) {
    out << "<polyline fill='none' " << style << " points='";
    for (const auto& [x, y] : pts) out << pt(m.sx(x)) << "," << pt(m.sy(y)) << " ";
    out << "'/>\n";
}

std::vector<std::pair<double, double>> arc_points(double cx, double deg_from, double deg_to, int segments) {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i <= segments; ++i) {
        const double t = (deg_from + (deg_to - deg_from) * i / segments) * M_PI / 180.0;
        pts.emplace_back(cx + std::cos(t), std::sin(t));
    }
    return pts;
}

void open_marker(std::ostream& out, const Mapper& m, double x, double y) {
    out << "<circle cx='" << pt(m.sx(x)) << "' cy='" << pt(m.sy(y))
        << "' r='3.5' fill='white' stroke='#27509b' stroke-width='1.4'/>\n";
}

}  // namespace

void write_locus_svg(const std::string& path, const std::optional<CurveFamily>& family,
                     const std::vector<std::pair<double, double>>& roots, const SvgOptions& opts) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);

    Mapper m{opts, opts.width_px / (opts.xmax - opts.xmin), 0.0};
    m.height = (opts.ymax - opts.ymin) * m.scale;

    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << opts.width_px << "' height='"
        << pt(m.height) << "' viewBox='0 0 " << opts.width_px << " " << pt(m.height) << "'>\n";
    out << "<!-- seed=" << opts.seed << " -->\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";

    // axes
    const std::string axis_style = "stroke='#999999' stroke-width='1'";
    out << "<line x1='" << pt(m.sx(opts.xmin)) << "' y1='" << pt(m.sy(0)) << "' x2='" << pt(m.sx(opts.xmax))
        << "' y2='" << pt(m.sy(0)) << "' " << axis_style << "/>\n";
    out << "<line x1='" << pt(m.sx(0)) << "' y1='" << pt(m.sy(opts.ymin)) << "' x2='" << pt(m.sx(0)) << "' y2='"
        << pt(m.sy(opts.ymax)) << "' " << axis_style << "/>\n";

    const std::string solid = "stroke='#27509b' stroke-width='2'";
    const std::string dashed = "stroke='#9ab2dd' stroke-width='1.2' stroke-dasharray='6,5'";
    const double root3_2 = std::sqrt(3.0) / 2.0;

    if (family && family->kind == CurveFamily::Kind::Line) {
        polyline(out, m, {{0.5, opts.ymin}, {0.5, opts.ymax}}, solid);
    } else if (family && family->kind == CurveFamily::Kind::ThreeCurve) {
        // dashed completion circles |x| = 1 and |x-1| = 1
        out << "<circle cx='" << pt(m.sx(0)) << "' cy='" << pt(m.sy(0)) << "' r='" << pt(m.scale) << "' fill='none' "
            << dashed << "/>\n";
        out << "<circle cx='" << pt(m.sx(1)) << "' cy='" << pt(m.sy(0)) << "' r='" << pt(m.scale) << "' fill='none' "
            << dashed << "/>\n";
        // solid arcs: left arc through 0 (circle center 1), right arc through 1 (center 0)
        polyline(out, m, arc_points(1.0, 120, 240, 96), solid);
        polyline(out, m, arc_points(0.0, -60, 60, 96), solid);
        // rays from the sixth roots of unity
        polyline(out, m, {{0.5, root3_2}, {0.5, opts.ymax}}, solid);
        polyline(out, m, {{0.5, -root3_2}, {0.5, opts.ymin}}, solid);
    }

    for (const auto& [x, y] : roots) {
        if (x < opts.xmin || x > opts.xmax || y < opts.ymin || y > opts.ymax) continue;
        out << "<circle cx='" << pt(m.sx(x)) << "' cy='" << pt(m.sy(y)) << "' r='2.4' fill='#c03030'/>\n";
    }

    if (family && family->kind == CurveFamily::Kind::ThreeCurve) {
        open_marker(out, m, 0, 0);
        open_marker(out, m, 1, 0);
        open_marker(out, m, 0.5, root3_2);
        open_marker(out, m, 0.5, -root3_2);
    }

    if (!opts.annotation.empty()) {
        out << "<text x='12' y='22' font-family='sans-serif' font-size='14' fill='#333333'>";
        for (char c : opts.annotation) {
            switch (c) {
                case '<': out << "&lt;"; break;
                case '>': out << "&gt;"; break;
                case '&': out << "&amp;"; break;
                default: out << c;
            }
        }
        out << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace kan
