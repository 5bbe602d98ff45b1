#include "twocenter/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace twocenter {

namespace {

constexpr double kSize = 1000.0;
constexpr double kMargin = 40.0;

struct Box {
    double x0 = std::numeric_limits<double>::infinity();
    double y0 = std::numeric_limits<double>::infinity();
    double x1 = -std::numeric_limits<double>::infinity();
    double y1 = -std::numeric_limits<double>::infinity();

    void add(Point p, double pad = 0.0) {
        x0 = std::min(x0, p.x - pad);
        y0 = std::min(y0, p.y - pad);
        x1 = std::max(x1, p.x + pad);
        y1 = std::max(y1, p.y + pad);
    }
};

struct View {
    Box box;
    double scale = 1.0;

    Point map(Point p) const {
        return {kMargin + (p.x - box.x0) * scale, kSize - kMargin - (p.y - box.y0) * scale};
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string arc_path(const View& view, const Arc& a) {
    const double extent = a.extent();
    const double r = a.radius * view.scale;
    const Point s = view.map(a.start());
    std::string d = "M " + num(s.x) + " " + num(s.y);
    // y is flipped, so ccw on the page is sweep-flag 0.
    if (extent >= 2.0 * std::numbers::pi - 1e-9) {
        const Point m = view.map(a.point_at(a.start_angle + std::numbers::pi));
        d += " A " + num(r) + " " + num(r) + " 0 0 0 " + num(m.x) + " " + num(m.y);
        d += " A " + num(r) + " " + num(r) + " 0 0 0 " + num(s.x) + " " + num(s.y);
        return d;
    }
    const Point e = view.map(a.end());
    d += " A " + num(r) + " " + num(r) + " 0 " + (extent > std::numbers::pi ? "1" : "0") + " 0 " + num(e.x) + " " +
         num(e.y);
    return d;
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
    Box box;
    for (const Point& p : scene.points) box.add(p);
    if (scene.solution) {
        box.add(scene.solution->disk1.center, scene.solution->disk1.radius);
        box.add(scene.solution->disk2.center, scene.solution->disk2.radius);
    }
    if (scene.coverage) {
        for (const Arc& a : scene.coverage->arcs) {
            for (int k = 0; k <= 16; ++k) box.add(a.point_at(a.start_angle + a.extent() * k / 16.0));
        }
    }
    if (!std::isfinite(box.x0)) box.add({0, 0}, 1.0);
    const double span = std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-12});
    View view{box, (kSize - 2 * kMargin) / span};

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
                      "viewBox=\"0 0 1000 1000\">\n<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
    if (scene.solution) {
        const char* colors[] = {"#1f77b4", "#d62728"};
        int k = 0;
        for (const Disk& d : {scene.solution->disk1, scene.solution->disk2}) {
            const Point c = view.map(d.center);
            out += "<circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" + num(d.radius * view.scale) +
                   "\" fill=\"" + colors[k] + "\" fill-opacity=\"0.15\" stroke=\"" + colors[k] + "\"/>\n";
            ++k;
        }
    }
    if (scene.coverage) {
        for (const Arc& a : scene.coverage->arcs) {
            out += "<path d=\"" + arc_path(view, a) +
                   "\" fill=\"none\" stroke=\"#2ca02c\" stroke-dasharray=\"8 6\" stroke-width=\"1.5\"/>\n";
        }
    }
    if (scene.hull) {
        for (const Arc& a : scene.hull->arcs()) {
            out += "<path d=\"" + arc_path(view, a) + "\" fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"2\"/>\n";
        }
    }
    for (std::size_t i = 0; i < scene.points.size(); ++i) {
        const Point p = view.map(scene.points[i]);
        const char* fill = "black";
        if (scene.solution && i < scene.solution->assignment.size()) {
            fill = scene.solution->assignment[i] == 1 ? "#1f77b4" : "#d62728";
        }
        out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"3\" fill=\"" + fill + "\"/>\n";
    }
    return out + "</svg>\n";
}

}  // namespace twocenter
