#ifndef TWOCENTER_SVG_HPP
#define TWOCENTER_SVG_HPP

#include <optional>
#include <span>
#include <string>

#include "twocenter/circular_hull.hpp"
#include "twocenter/solution.hpp"

namespace twocenter {

struct SvgScene {
    std::span<const Point> points;
    std::optional<CircularHull> hull;
    std::optional<Coverage> coverage;
    std::optional<TwoDiskSolution> solution;
};

/// 1000x1000 drawing scaled to fit everything in the scene: points as dots,
/// hull arcs solid, coverage dashed, witness disks translucent.
std::string render_svg(const SvgScene& scene);

}  // namespace twocenter

#endif  // TWOCENTER_SVG_HPP
