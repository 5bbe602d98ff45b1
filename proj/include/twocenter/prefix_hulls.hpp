#ifndef TWOCENTER_PREFIX_HULLS_HPP
#define TWOCENTER_PREFIX_HULLS_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "twocenter/circular_hull.hpp"

namespace twocenter {

class IndexOutOfRange : public GeometryError {
public:
    IndexOutOfRange() : GeometryError("prefix index out of range") {}
};

/*
 * One persistent hull version per prefix length of an angularly sorted
 * sequence. Version i holds alpha_r of the first i points; all versions share
 * nodes in a single arena and the index is read-only once built.
 */
class PrefixHullIndex {
public:
    static constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();

    double radius() const { return radius_; }
    Point anchor() const { return anchor_; }
    std::size_t size() const { return n_; }

    /// Smallest i whose hull does not exist, or kNever.
    std::size_t death_index() const { return death_; }
    bool exists(std::size_t i) const;

    /// Hull of the first i points; the empty sentinel for i = 0.
    std::optional<CircularHull> hull_at(std::size_t i) const;
    /// Vertex cycle of version i in deque order (not canonicalized). Empty if
    /// the hull does not exist.
    std::vector<Point> vertices_at(std::size_t i) const;
    /// The most recently inserted vertex and its cyclic neighbour in version i.
    std::optional<std::pair<Point, Point>> frontier(std::size_t i) const;

    friend PrefixHullIndex build_prefix_hulls(std::span<const Point>, Point, double, Winding);

private:
    double radius_ = 0.0;
    Point anchor_;
    std::size_t n_ = 0;
    std::size_t death_ = kNever;
    HullBuilder::Storage storage_;
    std::vector<HullBuilder::Storage::Version> versions_;
};

/// Versions for prefixes of seq, which must be sorted ccw around anchor.
PrefixHullIndex build_prefix_hulls(std::span<const Point> seq, Point anchor, double r,
                                   Winding winding = Winding::Ccw);

/// Version i holds the last i points of seq, which is sorted around anchor in
/// the given winding; the suffixes are inserted in the opposite winding.
PrefixHullIndex build_suffix_hulls(std::span<const Point> seq, Point anchor, double r,
                                   Winding winding = Winding::Ccw);

}  // namespace twocenter

#endif  // TWOCENTER_PREFIX_HULLS_HPP
