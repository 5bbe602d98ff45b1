#ifndef TWOCENTER_SOLUTION_HPP
#define TWOCENTER_SOLUTION_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twocenter/geometry.hpp"

namespace twocenter {

/// Which branch of the decision produced a witness.
struct Branch {
    Branch() = default;
    explicit Branch(std::string k) : kind(std::move(k)) {}

    std::string kind;  // trivial | nearby | distant-subcase1 | distant-subcase2 | oracle
    int rotation = -1;
    int pair = -1;
    int variant = -1;
    int axis = -1;  // 0: x-axis through o, 1: y-axis
    std::optional<Point> o;
};

struct TwoDiskSolution {
    Disk disk1;
    Disk disk2;
    double radius = 0.0;
    std::vector<int> assignment;  // 1 or 2 per input point; points in both get 1
    Branch branch;
};

struct DecisionConfig {
    int rotations = 24;
    int jobs = 1;  // 1 runs the serial reference path
};

/// Both disks within r(1+eps) and every point covered.
bool verify(std::span<const Point> S, const TwoDiskSolution& sol, double r, double eps = kEps);

/// Labels every point by the disk containing it; false if some point is uncovered.
bool assign(std::span<const Point> S, TwoDiskSolution& sol, double eps = kEps);

/// Witness from a 0/1 membership mask: disk1 = meb of the marked points,
/// disk2 = meb of the rest (empty sides become zero-radius disks at S[0]).
/// nullopt unless both fit in r and the result verifies.
std::optional<TwoDiskSolution> solution_from_mask(std::span<const Point> S,
                                                  const std::vector<char>& in_first, double r,
                                                  Branch branch);

/// Witness when one disk already covers S.
std::optional<TwoDiskSolution> trivial_solution(std::span<const Point> S, double r);

}  // namespace twocenter

#endif  // TWOCENTER_SOLUTION_HPP
