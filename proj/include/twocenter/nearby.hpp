#ifndef TWOCENTER_NEARBY_HPP
#define TWOCENTER_NEARBY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twocenter/geometry.hpp"
#include "twocenter/solution.hpp"

namespace twocenter {

enum class Axis { X, Y };

/*
 * S split by an axis through o. plus holds the points on or above the axis in
 * ccw order from the positive axis direction, minus the points below it in cw
 * order. Angular ties are broken by distance from o, then by input index.
 */
struct AngularSplit {
    Point o;
    Axis axis = Axis::X;
    std::vector<int> plus;
    std::vector<int> minus;
};

AngularSplit make_split(std::span<const Point> S, Point o, Axis axis);

/// Walk log: i_of_j[j] is the largest feasible i for column j.
struct StaircaseTrace {
    std::vector<std::ptrdiff_t> i_of_j;
    std::size_t probes = 0;
};

struct StaircaseHit {
    std::size_t i;
    std::size_t j;
};

/// First (i, j) with A[i, j] <= r and B[i, j] <= r, where A is the MEB radius
/// of plus[0, i) u minus[0, j) and B that of the complement.
std::optional<StaircaseHit> staircase_feasible(std::span<const Point> S, const AngularSplit& split,
                                               double r, StaircaseTrace* trace = nullptr);

/// Meb center followed by a grid over the bounding box expanded by twice its
/// diagonal d, spacing d/24, ordered by distance from the meb center.
std::vector<Point> candidate_centers(std::span<const Point> S);

/// Staircase decision through o, trying the x- then the y-axis.
std::optional<TwoDiskSolution> decide_nearby(std::span<const Point> S, double r, Point o);

/// decide_nearby over every candidate center within 2r of all points,
/// skipping candidates that induce an already tried split.
std::optional<TwoDiskSolution> decide_nearby_all(std::span<const Point> S, double r,
                                                 const DecisionConfig& cfg = {});

}  // namespace twocenter

#endif  // TWOCENTER_NEARBY_HPP
