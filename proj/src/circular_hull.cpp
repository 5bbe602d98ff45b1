#include "twocenter/circular_hull.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace twocenter {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalize_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
    return a;
}

// w is dropped between u and v when it lies strictly inside the radius-r disk
// whose boundary carries the arc u->v.
bool redundant(Point u, Point w, Point v, double r) {
    if (u == v) return false;
    return dist(left_center(u, v, r), w) < r * (1.0 - kEps);
}

bool fits(std::span<const Point> pts, double r) {
    return meb(pts).radius <= r * (1.0 + kEps);
}

std::vector<Point> rotate_to_min(std::vector<Point> cycle) {
    if (cycle.size() > 1) {
        const auto it = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), it, cycle.end());
    }
    return cycle;
}

bool angle_in_arc(const Arc& arc, double angle, double tol) {
    const double off = normalize_angle(angle - arc.start_angle);
    return off <= arc.extent() + tol || off >= kTwoPi - tol;
}

}  // namespace

Arc make_ccw_arc(Point center, double radius, Point from, Point to) {
    const double a0 = std::atan2(from.y - center.y, from.x - center.x);
    double ext = normalize_angle(std::atan2(to.y - center.y, to.x - center.x) - a0);
    if (ext <= 1e-15) ext = kTwoPi;
    return Arc{center, radius, a0, a0 + ext, Winding::Ccw};
}

// ---------------------------------------------------------------------------
// CircularHull

CircularHull CircularHull::everywhere(double r) {
    CircularHull h;
    h.radius_ = r;
    return h;
}

CircularHull CircularHull::from_cycle(double r, std::vector<Point> ccw_cycle) {
    CircularHull h;
    h.radius_ = r;
    h.vertices_ = rotate_to_min(std::move(ccw_cycle));
    return h;
}

bool CircularHull::degenerate() const {
    if (vertices_.size() == 1) return true;
    if (vertices_.size() == 2) {
        return std::abs(dist(vertices_[0], vertices_[1]) - 2.0 * radius_) <= kEps * 2.0 * radius_;
    }
    return false;
}

Point CircularHull::arc_center(std::size_t i) const {
    const std::size_t m = vertices_.size();
    return left_center(vertices_[i], vertices_[(i + 1) % m], radius_);
}

std::vector<Arc> CircularHull::arcs() const {
    std::vector<Arc> out;
    const std::size_t m = vertices_.size();
    if (m < 2) return out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Point u = vertices_[i];
        const Point v = vertices_[(i + 1) % m];
        out.push_back(make_ccw_arc(arc_center(i), radius_, u, v));
    }
    return out;
}

bool CircularHull::contains(Point z) const {
    const std::size_t m = vertices_.size();
    if (m == 0) return true;
    if (m == 1) return dist(z, vertices_[0]) <= kEps * std::max(radius_, 1e-300);
    for (std::size_t i = 0; i < m; ++i) {
        if (dist(arc_center(i), z) > radius_ * (1.0 + kEps)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Construction

std::optional<CircularHull> build_hull(std::span<const Point> pts, double r) {
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i] < pts[i - 1]) throw UnsortedInputError();
    }
    if (pts.empty()) return CircularHull::everywhere(r);
    const Disk enclosing = meb(pts);
    if (enclosing.radius > r * (1.0 + kEps)) return std::nullopt;

    std::vector<Point> convex = convex_hull_sorted(pts);
    const std::size_t m = convex.size();
    if (m <= 2) return CircularHull::from_cycle(r, std::move(convex));

    // A point on the MEB boundary is a hull vertex; start the scan there so
    // the bottom of the stack is never popped.
    std::size_t start = 0;
    double far = -1.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double d = dist(enclosing.center, convex[i]);
        if (d > far) {
            far = d;
            start = i;
        }
    }
    std::vector<Point> stack;
    stack.reserve(m);
    stack.push_back(convex[start]);
    for (std::size_t k = 1; k <= m; ++k) {
        const Point v = convex[(start + k) % m];
        while (stack.size() >= 2 && redundant(stack[stack.size() - 2], stack.back(), v, r)) {
            stack.pop_back();
        }
        if (k < m) stack.push_back(v);
    }
    return CircularHull::from_cycle(r, std::move(stack));
}

std::optional<CircularHull> hull_of(std::span<const Point> points, double r) {
    std::vector<Point> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    return build_hull(sorted, r);
}

bool hull_contains(const CircularHull& hull, Point z) { return hull.contains(z); }

bool union_exists(std::span<const CircularHull* const> hulls, double r) {
    thread_local std::vector<Point> pts;
    pts.clear();
    for (const CircularHull* h : hulls) {
        pts.insert(pts.end(), h->vertices().begin(), h->vertices().end());
    }
    if (pts.empty()) return true;
    return fits(pts, r);
}

std::optional<CircularHull> merge_separated(const CircularHull& a, const CircularHull& b) {
    if (!a.empty() && !b.empty() && a.radius() != b.radius()) throw RadiusMismatchError();
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<Point> pts(a.vertices().begin(), a.vertices().end());
    pts.insert(pts.end(), b.vertices().begin(), b.vertices().end());
    if (!fits(pts, a.radius())) return std::nullopt;
    std::sort(pts.begin(), pts.end());
    return build_hull(pts, a.radius());
}

TangentResult tangents(const CircularHull& a, const CircularHull& b) {
    if (!a.empty() && !b.empty() && a.radius() != b.radius()) throw RadiusMismatchError();
    const auto merged = merge_separated(a, b);
    if (!merged) return Containment::NoCommonDisk;
    const auto in_a = [&](Point p) {
        return std::find(a.vertices().begin(), a.vertices().end(), p) != a.vertices().end();
    };
    const auto verts = merged->vertices();
    const std::size_t m = verts.size();
    std::optional<Bridge> ab;
    std::optional<Bridge> ba;
    for (std::size_t i = 0; i < m; ++i) {
        const Point u = verts[i];
        const Point v = verts[(i + 1) % m];
        const bool ua = in_a(u);
        const bool va = in_a(v);
        if (ua && !va) ab = Bridge{u, v};
        if (!ua && va) ba = Bridge{u, v};
    }
    if (ab && ba) return Bridges{*ab, *ba};
    bool all_a = true;
    for (const Point& v : verts) all_a = all_a && in_a(v);
    return all_a ? Containment::FirstContainsSecond : Containment::SecondContainsFirst;
}

// ---------------------------------------------------------------------------
// HullBuilder

HullBuilder::HullBuilder(double r, Point anchor, Winding winding)
    : radius_(r), anchor_(anchor), winding_(winding) {}

void HullBuilder::check_order(Point p) {
    const Point dir = p - anchor_;
    if (dir.x == 0.0 && dir.y == 0.0) return;
    if (!ref_dir_) {
        ref_dir_ = dir;
        return;
    }
    double rel = std::atan2(cross(*ref_dir_, dir), dot(*ref_dir_, dir));
    if (winding_ == Winding::Cw) rel = -rel;
    rel = normalize_angle(rel);
    if (rel > kTwoPi - 1e-9 && swept_ < 1e-9) rel = 0.0;
    if (rel < swept_ - 1e-9) throw OrderViolationError();
    swept_ = std::max(swept_, rel);
}

void HullBuilder::replace_cycle(std::span<const Point> cycle) {
    current_ = storage_.from_vector(cycle);
}

CircularHull HullBuilder::hull() const {
    if (!alive_) throw NoCoverageError();
    return CircularHull::from_cycle(radius_, storage_.to_vector(current_));
}

bool HullBuilder::insert(Point p) {
    check_order(p);
    ++insertions_;
    if (!alive_) return false;

    const std::vector<Point> cyc = storage_.to_vector(current_);
    const std::size_t m = cyc.size();
    const double r = radius_;

    if (m == 0) {
        current_ = storage_.push_front(current_, p);
        return true;
    }
    if (m == 1) {
        if (p == cyc[0]) return true;
        if (dist(p, cyc[0]) > 2.0 * r * (1.0 + kEps)) {
            alive_ = false;
            return false;
        }
        current_ = storage_.push_front(current_, p);
        return true;
    }

    std::vector<char> visible(m);
    std::size_t nvis = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const Point c = left_center(cyc[i], cyc[(i + 1) % m], r);
        visible[i] = dist(c, p) > r * (1.0 + kEps);
        nvis += visible[i];
    }
    if (nvis == 0) return true;  // interior point

    {
        thread_local std::vector<Point> probe;
        probe.assign(cyc.begin(), cyc.end());
        probe.push_back(p);
        if (!fits(probe, r)) {
            alive_ = false;
            return false;
        }
    }

    // The visible arcs should form one cyclic run [first, first + nvis).
    std::size_t first = m;
    for (std::size_t i = 0; i < m; ++i) {
        if (visible[i] && !visible[(i + m - 1) % m]) {
            first = i;
            break;
        }
    }
    bool single_run = first < m;
    if (single_run) {
        for (std::size_t k = 0; k < nvis; ++k) single_run = single_run && visible[(first + k) % m];
    }
    if (!single_run) {
        std::vector<Point> pts = cyc;
        pts.push_back(p);
        const auto rebuilt = hull_of(pts, r);
        std::vector<Point> cycle(rebuilt->vertices().begin(), rebuilt->vertices().end());
        const auto it = std::find(cycle.begin(), cycle.end(), p);
        if (it != cycle.end()) std::rotate(cycle.begin(), it, cycle.end());
        pops_ += m + 1 - cycle.size();
        replace_cycle(cycle);
        return true;
    }

    // Kept vertices, as cyclic indices from b forward to a.
    const std::size_t a = first;
    const std::size_t b = (first + nvis) % m;
    std::vector<std::size_t> kept;
    kept.reserve(m);
    for (std::size_t k = 0, idx = b;; ++k, idx = (idx + 1) % m) {
        kept.push_back(idx);
        if (idx == a) break;
    }
    while (kept.size() >= 2 && redundant(cyc[kept[kept.size() - 2]], cyc[kept.back()], p, r)) {
        kept.pop_back();
    }
    std::size_t drop_front = 0;
    while (kept.size() - drop_front >= 2 &&
           redundant(p, cyc[kept[drop_front]], cyc[kept[drop_front + 1]], r)) {
        ++drop_front;
    }
    kept.erase(kept.begin(), kept.begin() + static_cast<std::ptrdiff_t>(drop_front));
    pops_ += m - kept.size();

    const std::size_t lo = kept.front();
    const std::size_t hi = kept.back();
    if (lo <= hi && hi - lo + 1 == kept.size()) {
        // Kept range is contiguous in deque order: trim both ends.
        for (std::size_t i = 0; i < lo; ++i) current_ = storage_.pop_front(current_);
        for (std::size_t i = hi + 1; i < m; ++i) current_ = storage_.pop_back(current_);
        current_ = storage_.push_front(current_, p);
    } else if (hi < lo && hi < 4) {
        // Kept range wraps past the deque end; move the short head to the back.
        for (std::size_t i = 0; i < lo; ++i) current_ = storage_.pop_front(current_);
        for (std::size_t i = 0; i <= hi; ++i) current_ = storage_.push_back(current_, cyc[i]);
        current_ = storage_.push_front(current_, p);
    } else {
        std::vector<Point> cycle;
        cycle.reserve(kept.size() + 1);
        cycle.push_back(p);
        for (std::size_t idx : kept) cycle.push_back(cyc[idx]);
        replace_cycle(cycle);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Coverage

Coverage build_coverage(const CircularHull& hull) {
    Coverage cov;
    const double r = hull.radius();
    cov.radius = r;
    const auto verts = hull.vertices();
    const std::size_t m = verts.size();
    if (m == 0) return cov;
    if (m == 1) {
        cov.arcs.push_back(Arc{verts[0], 2.0 * r, 0.0, kTwoPi, Winding::Ccw});
        cov.interior = verts[0];
        return cov;
    }
    std::vector<Point> centers(m);
    for (std::size_t i = 0; i < m; ++i) centers[i] = hull.arc_center(i);
    Point sum{0, 0};
    for (const Point& v : verts) sum = sum + v;
    cov.interior = sum * (1.0 / static_cast<double>(m));

    for (std::size_t i = 0; i < m; ++i) {
        const Point v = verts[i];
        const Point prev_c = centers[(i + m - 1) % m];
        const Point c = centers[i];
        // 2r-arc swept by the disks tangent at vertex v.
        const Point from = 2.0 * prev_c - v;
        const Point to = 2.0 * c - v;
        Arc big = make_ccw_arc(v, 2.0 * r, from, to);
        if (dist(from, to) <= kEps * r) big.end_angle = big.start_angle;  // degenerate pair
        cov.arcs.push_back(big);
        // r-arc: antipodal copy of hull arc i.
        const Point w = verts[(i + 1) % m];
        cov.arcs.push_back(make_ccw_arc(c, r, 2.0 * c - v, 2.0 * c - w));
    }
    return cov;
}

bool Coverage::contains(Point z) const {
    if (arcs.empty()) return true;
    const Point d = z - interior;
    const double len = norm(d);
    if (len == 0.0) return true;
    const Point u = d * (1.0 / len);
    double hit = -1.0;
    for (const Arc& arc : arcs) {
        // Solve |interior + t u - center| = radius for t > 0.
        const Point f = interior - arc.center;
        const double bq = dot(f, u);
        const double cq = norm2(f) - arc.radius * arc.radius;
        const double disc = bq * bq - cq;
        if (disc < 0) continue;
        const double sq = std::sqrt(disc);
        for (double t : {-bq - sq, -bq + sq}) {
            if (t <= 0) continue;
            const Point q = interior + u * t;
            const double ang = std::atan2(q.y - arc.center.y, q.x - arc.center.x);
            if (angle_in_arc(arc, ang, 1e-9)) hit = std::max(hit, t);
        }
    }
    if (hit < 0) return false;
    return len <= hit + kEps * radius;
}

std::vector<Point> Coverage::sample_boundary(std::size_t n) const {
    std::vector<Point> out;
    double total = 0.0;
    for (const Arc& a : arcs) total += a.extent() * a.radius;
    if (total <= 0.0) return out;
    for (const Arc& a : arcs) {
        const auto k = static_cast<std::size_t>(
            std::max(1.0, std::round(static_cast<double>(n) * a.extent() * a.radius / total)));
        for (std::size_t i = 0; i < k; ++i) {
            out.push_back(a.point_at(a.start_angle + a.extent() * static_cast<double>(i) /
                                                         static_cast<double>(k)));
        }
    }
    return out;
}

bool coverage_contains(std::span<const Point> Q, Point z, double r) {
    if (Q.empty()) return true;
    if (meb(Q).radius > r * (1.0 + kEps)) throw NoCoverageError();
    std::vector<Point> pts(Q.begin(), Q.end());
    pts.push_back(z);
    return fits(pts, r);
}

bool coverage_contains(const CircularHull& hull, Point z) {
    const auto verts = hull.vertices();
    const std::size_t m = verts.size();
    const double r = hull.radius();
    if (m == 0) return true;
    for (const Point& v : verts) {
        if (dist(v, z) > 2.0 * r * (1.0 + kEps)) return false;
    }
    if (m >= 2) {
        for (std::size_t i = 0; i < m; ++i) {
            if (dist(hull.arc_center(i), z) <= r * (1.0 + kEps)) return true;
        }
    }
    thread_local std::vector<Point> pts;
    pts.assign(verts.begin(), verts.end());
    pts.push_back(z);
    return fits(pts, r);
}

CoverageTester::CoverageTester(const CircularHull& hull)
    : verts_(hull.vertices().begin(), hull.vertices().end()), r_(hull.radius()) {
    if (verts_.empty()) return;
    const std::size_t m = verts_.size();
    if (m >= 2) {
        for (std::size_t i = 0; i < m; ++i) centers_.push_back(hull.arc_center(i));
    }
    const Disk d = meb(verts_);
    const double rr = r_ * (1.0 + kEps);
    c_ = d.center;
    inner_ = (r_ - d.radius) - 1e-12 * r_;
    outer_ = rr + std::sqrt(std::max(0.0, rr * rr - d.radius * d.radius)) + 1e-12 * r_;
}

bool CoverageTester::contains(Point z) const {
    if (verts_.empty()) return true;
    const double d = dist(z, c_);
    if (d <= inner_) return true;
    if (d > outer_) return false;
    const double far = 2.0 * r_ * (1.0 + kEps);
    for (const Point& v : verts_) {
        if (dist(v, z) > far) return false;
    }
    const double near = r_ * (1.0 + kEps);
    for (const Point& c : centers_) {
        if (dist(c, z) <= near) return true;
    }
    thread_local std::vector<Point> pts;
    pts.assign(verts_.begin(), verts_.end());
    pts.push_back(z);
    return fits(pts, r_);
}

}  // namespace twocenter
