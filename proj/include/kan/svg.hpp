#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kan/curves.hpp"

namespace kan {

struct SvgOptions {
    double xmin = -1.7;
    double xmax = 2.7;
    double ymin = -2.4;
    double ymax = 2.4;
    int width_px = 720;
    std::string annotation;  // drawn top-left when nonempty
    std::uint64_t seed = 0;
};

// Complex-plane figure: axes, the curve family (solid pieces; the two full
// circles dashed for the three-curve case; open markers at 0, 1 and the
// sixth roots of unity) and the roots as filled dots.
void write_locus_svg(const std::string& path, const std::optional<CurveFamily>& family,
                     const std::vector<std::pair<double, double>>& roots, const SvgOptions& opts);

}  // namespace kan
