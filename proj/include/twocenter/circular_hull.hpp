#ifndef TWOCENTER_CIRCULAR_HULL_HPP
#define TWOCENTER_CIRCULAR_HULL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "twocenter/geometry.hpp"
#include "twocenter/persistent_deque.hpp"

namespace twocenter {

class UnsortedInputError : public GeometryError {
public:
    UnsortedInputError() : GeometryError("points are not sorted by (x, y)") {}
};

class OrderViolationError : public GeometryError {
public:
    OrderViolationError() : GeometryError("insertion violates angular order around the anchor") {}
};

class RadiusMismatchError : public GeometryError {
public:
    RadiusMismatchError() : GeometryError("circular hulls have different radii") {}
};

class NoCoverageError : public GeometryError {
public:
    NoCoverageError() : GeometryError("no disk of the given radius contains the set") {}
};

enum class Winding { Ccw, Cw };

/// A circular arc; start_angle <= end_angle and the arc is traversed in
/// `orientation` from start to end.
struct Arc {
    Point center;
    double radius = 0.0;
    double start_angle = 0.0;
    double end_angle = 0.0;
    Winding orientation = Winding::Ccw;

    double extent() const { return end_angle - start_angle; }
    Point point_at(double angle) const {
        return {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)};
    }
    Point start() const { return point_at(start_angle); }
    Point end() const { return point_at(end_angle); }
};

/// Ccw arc on the circle (center, radius) from the direction of `from` to the
/// direction of `to`; extent in (0, 2pi], a full turn when the directions agree.
Arc make_ccw_arc(Point center, double radius, Point from, Point to);

/*
 * The r-circular hull: intersection of all radius-r disks containing a point
 * set. Stored as its vertex cycle in counterclockwise order, rotated so the
 * lexicographically smallest vertex comes first. Consecutive vertices u, v are
 * joined by the radius-r arc whose center lies left of u->v.
 *
 * A default-constructed hull is the empty-set sentinel, which contains every
 * point and is the identity for merges.
 */
class CircularHull {
public:
    CircularHull() = default;

    static CircularHull everywhere(double r);
    /// Wraps an already valid ccw vertex cycle.
    static CircularHull from_cycle(double r, std::vector<Point> ccw_cycle);

    double radius() const { return radius_; }
    bool empty() const { return vertices_.empty(); }
    std::size_t size() const { return vertices_.size(); }
    std::span<const Point> vertices() const { return vertices_; }

    /// Single point, or two points exactly 2r apart.
    bool degenerate() const;

    /// Center of the arc from vertex i to vertex i+1.
    Point arc_center(std::size_t i) const;
    std::vector<Arc> arcs() const;

    bool contains(Point z) const;

    friend bool operator==(const CircularHull& a, const CircularHull& b) {
        return a.radius_ == b.radius_ && a.vertices_ == b.vertices_;
    }

private:
    double radius_ = 0.0;
    std::vector<Point> vertices_;
};

/// r-circular hull of points sorted by (x, y). nullopt when no radius-r disk
/// contains them.
std::optional<CircularHull> build_hull(std::span<const Point> sorted_points, double r);

/// Same as build_hull on a sorted copy.
std::optional<CircularHull> hull_of(std::span<const Point> points, double r);

bool hull_contains(const CircularHull& hull, Point z);

/// Existence of alpha_r(A u B) from the union of two hulls' vertex sets.
bool union_exists(std::span<const CircularHull* const> hulls, double r);

enum class Containment { FirstContainsSecond, SecondContainsFirst, NoCommonDisk };

/// Ccw arc of the merged hull from `from` to `to`.
struct Bridge {
    Point from;
    Point to;
};

struct Bridges {
    Bridge first_to_second;
    Bridge second_to_first;
};

using TangentResult = std::variant<Bridges, Containment>;

/// Common tangent arcs of two line-separated hulls of equal radius.
TangentResult tangents(const CircularHull& a, const CircularHull& b);

/// alpha_r of the union of two line-separated generating sets.
std::optional<CircularHull> merge_separated(const CircularHull& a, const CircularHull& b);

/*
 * Incremental hull for points arriving in angular order around an anchor.
 * The vertex cycle is kept in a persistent deque whose front is the most
 * recently inserted vertex; every insertion yields a new version and leaves
 * the old ones intact.
 */
class HullBuilder {
public:
    using Storage = PersistentDeque<Point>;

    HullBuilder(double r, Point anchor, Winding winding = Winding::Ccw);

    /// Returns false once no radius-r disk contains the inserted points.
    bool insert(Point p);

    bool alive() const { return alive_; }
    double radius() const { return radius_; }
    std::size_t insertions() const { return insertions_; }
    std::size_t pops() const { return pops_; }

    /// Current hull; the empty sentinel before the first insertion.
    CircularHull hull() const;

    Storage::Version version() const { return current_; }
    const Storage& storage() const { return storage_; }

private:
    void check_order(Point p);
    void replace_cycle(std::span<const Point> cycle);

    double radius_;
    Point anchor_;
    Winding winding_;
    bool alive_ = true;
    std::size_t insertions_ = 0;
    std::size_t pops_ = 0;
    std::optional<Point> ref_dir_;
    double swept_ = 0.0;
    Storage storage_;
    Storage::Version current_;
};

/*
 * The r-coverage: union of all radius-r disks containing a point set. Its
 * boundary alternates 2r-arcs centered at hull vertices with r-arcs that are
 * antipodal copies of the hull arcs. arcs[2i] is the 2r-arc of vertex i and
 * arcs[2i+1] the r-arc of hull arc i.
 */
struct Coverage {
    double radius = 0.0;
    std::vector<Arc> arcs;
    Point interior;  // a point inside the region, used by contains()

    bool contains(Point z) const;
    /// Roughly n points along the boundary in ccw order.
    std::vector<Point> sample_boundary(std::size_t n) const;
};

Coverage build_coverage(const CircularHull& hull);

/// z lies in CR_r(Q) iff meb(Q u {z}) <= r. Throws NoCoverageError if meb(Q) > r.
bool coverage_contains(std::span<const Point> Q, Point z, double r);

/// Same test against a hull's vertex set, which has the same MEB as Q.
bool coverage_contains(const CircularHull& hull, Point z);

/*
 * coverage_contains for many queries against one hull. Points within
 * r - rho of the MEB center (radius rho) are inside; points beyond
 * r + sqrt(r^2 - rho^2) are outside; the rest fall through to the full test.
 */
class CoverageTester {
public:
    explicit CoverageTester(const CircularHull& hull);
    bool contains(Point z) const;

private:
    std::vector<Point> verts_;
    std::vector<Point> centers_;
    double r_ = 0.0;
    Point c_;
    double inner_ = 0.0;
    double outer_ = 0.0;
};

}  // namespace twocenter

#endif  // TWOCENTER_CIRCULAR_HULL_HPP
