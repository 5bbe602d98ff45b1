#ifndef TWOCENTER_GEOMETRY_HPP
#define TWOCENTER_GEOMETRY_HPP

#include <cmath>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twocenter {

/// Relative tolerance used for every incidence / containment comparison.
inline constexpr double kEps = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point a) { return dot(a, a); }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline double dist2(Point a, Point b) { return norm2(a - b); }
inline Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
/// Left normal (counterclockwise quarter turn).
inline Point perp(Point a) { return {-a.y, a.x}; }

/// Twice the signed area of (a, b, c); positive for a left turn.
inline double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

struct Disk {
    Point center;
    double radius = 0.0;

    /// Closed containment with the relative tolerance kEps.
    bool contains(Point p, double eps = kEps) const {
        return dist(center, p) <= radius * (1.0 + eps);
    }
};

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CollinearError : public GeometryError {
public:
    CollinearError() : GeometryError("points are collinear") {}
};

class DegenerateError : public GeometryError {
public:
    explicit DegenerateError(const std::string& what) : GeometryError(what) {}
};

class EmptyInputError : public GeometryError {
public:
    explicit EmptyInputError(const std::string& what) : GeometryError(what) {}
};

/// Circle through three points. Throws CollinearError for (near-)collinear input.
Disk circumcircle(Point p, Point q, Point s);

/// Centers of the radius-r circles through p and q (0, 1 or 2 of them).
/// Two centers are ordered left of p->q first.
std::vector<Point> disk_centers_through(Point p, Point q, double r);

/// Center of the radius-r circle through p and q lying left of p->q.
/// Requires |pq| <= 2r up to tolerance; the chord is clamped otherwise.
Point left_center(Point p, Point q, double r);

/// Disk with diameter pq.
inline Disk diametral_disk(Point p, Point q) { return {midpoint(p, q), 0.5 * dist(p, q)}; }

/// Minimum enclosing disk, randomized incremental with a seed fixed by the input size.
Disk meb(std::span<const Point> points);

/// Strictly convex hull vertices, ccw, by Andrew's monotone chain. The sorted
/// variant expects (x, y)-sorted input.
std::vector<Point> convex_hull_sorted(std::span<const Point> sorted_points);
std::vector<Point> convex_hull(std::span<const Point> points);

struct FarthestPairResult {
    Point a;
    Point b;
    double distance = 0.0;
    Point midpoint;
};

/// argmax |ab| over A x B; ties go to the lexicographically smallest (a, b).
FarthestPairResult farthest_pair_bichromatic(std::span<const Point> A, std::span<const Point> B);

struct RotationFrame {
    double angle = 0.0;
    int index = 0;

    /// Frame k of K evenly spaced over a half turn.
    static RotationFrame make(int k, int K);
};

/// Rotate p by +angle about the origin.
Point rotate(Point p, double angle);

/// Each point rotated by -frame.angle about the origin.
std::vector<Point> rotate_frame(std::span<const Point> points, const RotationFrame& frame);

/// Sort key: polar angle of (p - center) in [0, 2*pi).
double polar_angle(Point center, Point p);

}  // namespace twocenter

#endif  // TWOCENTER_GEOMETRY_HPP
