#include "twocenter/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <cstdint>
#include <random>

namespace twocenter {

namespace {

// Tolerance used inside the incremental MEB loop; tighter than kEps so the
// returned disk is as small as the arithmetic allows.
constexpr double kMebSlack = 1e-12;

bool inside_meb(const Disk& d, Point p) {
    return dist(d.center, p) <= d.radius * (1.0 + kMebSlack);
}

Disk circle_three(Point a, Point b, Point c) {
    const Point ab = b - a;
    const Point ac = c - a;
    const double det = 2.0 * cross(ab, ac);
    const double scale = std::max({norm2(ab), norm2(ac), norm2(c - b)});
    if (std::abs(det) <= 1e-14 * scale) {
        // Collinear: the disk on the two farthest points.
        Disk best = diametral_disk(a, b);
        for (const Disk& d : {diametral_disk(a, c), diametral_disk(b, c)}) {
            if (d.radius > best.radius) best = d;
        }
        return best;
    }
    const double ab2 = norm2(ab);
    const double ac2 = norm2(ac);
    const Point off{(ac.y * ab2 - ab.y * ac2) / det, (ab.x * ac2 - ac.x * ab2) / det};
    const Point center = a + off;
    const double radius = std::max({dist(center, a), dist(center, b), dist(center, c)});
    return {center, radius};
}

}  // namespace

Disk circumcircle(Point p, Point q, Point s) {
    const double scale = std::max({dist2(p, q), dist2(p, s), dist2(q, s)});
    if (scale == 0.0 || std::abs(orient(p, q, s)) <= kEps * scale) {
        throw CollinearError();
    }
    return circle_three(p, q, s);
}

std::vector<Point> disk_centers_through(Point p, Point q, double r) {
    if (p == q) throw DegenerateError("disk_centers_through: p == q");
    const double d = dist(p, q);
    const double twice_r = 2.0 * r;
    if (d > twice_r * (1.0 + kEps)) return {};
    const Point m = midpoint(p, q);
    if (std::abs(d - twice_r) <= kEps * twice_r) return {m};
    const double h = std::sqrt(std::max(0.0, r * r - 0.25 * d * d));
    const Point n = perp(q - p) * (1.0 / d);
    return {m + n * h, m - n * h};
}

Point left_center(Point p, Point q, double r) {
    const double d = dist(p, q);
    const Point m = midpoint(p, q);
    if (d == 0.0) return m;
    const double h = std::sqrt(std::max(0.0, r * r - 0.25 * d * d));
    return m + perp(q - p) * (h / d);
}

namespace {

// Cheap to seed, unlike mt19937_64; meb runs on many tiny inputs.
struct SplitMix64 {
    using result_type = std::uint64_t;
    std::uint64_t state;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace

Disk meb(std::span<const Point> points) {
    if (points.empty()) throw EmptyInputError("meb of empty set");
    thread_local std::vector<Point> buf;
    buf.assign(points.begin(), points.end());
    SplitMix64 rng{0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(buf.size())};
    std::shuffle(buf.begin(), buf.end(), rng);

    Disk d{buf[0], 0.0};
    for (std::size_t i = 1; i < buf.size(); ++i) {
        if (inside_meb(d, buf[i])) continue;
        d = {buf[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (inside_meb(d, buf[j])) continue;
            d = diametral_disk(buf[i], buf[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (inside_meb(d, buf[k])) continue;
                d = circle_three(buf[i], buf[j], buf[k]);
            }
        }
    }
    return d;
}

FarthestPairResult farthest_pair_bichromatic(std::span<const Point> A, std::span<const Point> B) {
    if (A.empty() || B.empty()) throw EmptyInputError("farthest_pair_bichromatic: empty set");
    FarthestPairResult best{A[0], B[0], -1.0, {}};
    double best2 = -1.0;
    for (const Point& a : A) {
        for (const Point& b : B) {
            const double d2 = dist2(a, b);
            if (d2 > best2 || (d2 == best2 && std::pair(a, b) < std::pair(best.a, best.b))) {
                best2 = d2;
                best.a = a;
                best.b = b;
            }
        }
    }
    best.distance = std::sqrt(best2);
    best.midpoint = midpoint(best.a, best.b);
    return best;
}

std::vector<Point> convex_hull_sorted(std::span<const Point> pts) {
    std::vector<Point> uniq;
    uniq.reserve(pts.size());
    for (const Point& p : pts) {
        if (uniq.empty() || !(uniq.back() == p)) uniq.push_back(p);
    }
    if (uniq.size() <= 2) return uniq;
    std::vector<Point> hull(2 * uniq.size());
    std::size_t k = 0;
    for (const Point& p : uniq) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = uniq.size() - 1, t = k + 1; i-- > 0;) {
        const Point& p = uniq[i];
        while (k >= t && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<Point> convex_hull(std::span<const Point> pts) {
    std::vector<Point> sorted(pts.begin(), pts.end());
    std::sort(sorted.begin(), sorted.end());
    return convex_hull_sorted(sorted);
}

RotationFrame RotationFrame::make(int k, int K) {
    return {static_cast<double>(k) * std::numbers::pi / static_cast<double>(K), k};
}

Point rotate(Point p, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

std::vector<Point> rotate_frame(std::span<const Point> points, const RotationFrame& frame) {
    std::vector<Point> out(points.begin(), points.end());
    if (frame.index == 0 && frame.angle == 0.0) return out;
    for (Point& p : out) p = rotate(p, -frame.angle);
    return out;
}

double polar_angle(Point center, Point p) {
    double a = std::atan2(p.y - center.y, p.x - center.x);
    if (a < 0) a += 2.0 * std::numbers::pi;
    return a;
}

}  // namespace twocenter
