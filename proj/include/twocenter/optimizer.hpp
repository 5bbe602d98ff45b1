#ifndef TWOCENTER_OPTIMIZER_HPP
#define TWOCENTER_OPTIMIZER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twocenter/solution.hpp"

namespace twocenter {

class TooLargeError : public std::runtime_error {
public:
    explicit TooLargeError(std::size_t n);
};

/// 0, every |pq|/2 and the circumradius of every non-collinear triple,
/// sorted and deduplicated.
std::vector<double> candidate_radii(std::span<const Point> S);

/// Nearby over all candidate centers, then distant.
std::optional<TwoDiskSolution> feasible(std::span<const Point> S, double r, const DecisionConfig& cfg = {});

struct SolveConfig {
    DecisionConfig decision;
    std::size_t exact_limit = 400;  // above this many distinct points, bisect
    std::optional<double> tol;      // forces bisection
};

struct SolveStats {
    std::vector<std::pair<double, bool>> probes;  // (r, feasible) in probe order
    bool bisected = false;
    bool monotonicity_violation = false;
};

/*
 * Binary search over candidate_radii for the smallest feasible radius. The
 * returned disks are the minimum enclosing disks of the two labeled parts and
 * radius is the larger of them.
 */
TwoDiskSolution solve(std::span<const Point> S, const SolveConfig& cfg = {}, SolveStats* stats = nullptr);

/// Bisection on [0, meb(S).radius] down to tol * meb(S).radius.
TwoDiskSolution solve_bisect(std::span<const Point> S, double tol, const DecisionConfig& cfg = {},
                             SolveStats* stats = nullptr);

/// Minimum over all 2-partitions. Throws TooLargeError above 16 points.
TwoDiskSolution oracle_solve(std::span<const Point> S);

}  // namespace twocenter

#endif  // TWOCENTER_OPTIMIZER_HPP
