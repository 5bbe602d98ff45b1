#ifndef TWOCENTER_DISTANT_HPP
#define TWOCENTER_DISTANT_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twocenter/circular_hull.hpp"
#include "twocenter/solution.hpp"

namespace twocenter {

/// Two vertical lines l1 <= l2 in a rotated frame. s1 holds the indices with
/// x <= l1, s2 those with x > l2, mid the rest.
struct SplitPair {
    double l1 = 0.0;
    double l2 = 0.0;
    std::vector<int> s1;
    std::vector<int> s2;
    std::vector<int> mid;
};

/// The max-gap line paired with itself, then every pair of 26 lines spaced
/// W/25 apart across the x-extent W.
std::vector<SplitPair> candidate_line_pairs(std::span<const Point> R);

/*
 * Points of S outside s1 that lie in the r-coverage of s1, sorted ccw around
 * o1 (the first point of s1). mutual[k] says whether order[k] also lies in
 * the coverage of s2; seq lists the mutual ones.
 */
struct MutualCoverageSeq {
    Point o1;
    std::vector<int> order;
    std::vector<char> mutual;
    std::vector<int> seq;
    std::vector<int> seq_pos;  // position of seq[k] in order
};

/// nullopt when a hull does not exist or some point lies outside both coverages.
std::optional<MutualCoverageSeq> mutual_coverage(std::span<const Point> S, const std::vector<int>& s1,
                                                 const std::vector<int>& s2, double r);

/// Largest k such that s1, the first k mutual points and every point covered
/// only by s1's coverage fit in one radius-r disk; -1 if even k = 0 fails.
std::ptrdiff_t largest_prefix_k(std::span<const Point> S, const std::vector<int>& s1,
                                const MutualCoverageSeq& seq, double r);

struct SubcaseTwoWitness {
    Disk d1;
    Disk d2;
    Arc gamma;
    std::size_t k = 0;
    std::vector<int> assignment;
};

/// Canonical variant: D1 through the bridge arc of the hull that leaves s1.
std::optional<SubcaseTwoWitness> decide_subcase2_canonical(std::span<const Point> S,
                                                           const std::vector<int>& s1,
                                                           const std::vector<int>& s2, double r);

/// All four variants by reflection and role swap. R is the rotated frame the
/// split was computed in; the witness is in that frame.
std::optional<SubcaseTwoWitness> decide_subcase2(std::span<const Point> R, const SplitPair& split,
                                                 double r, int* variant = nullptr);

/// Nearby decision through the midpoint of the farthest s1-s2 pair.
std::optional<TwoDiskSolution> decide_subcase1(std::span<const Point> S, const SplitPair& split,
                                               double r);

std::optional<TwoDiskSolution> decide_distant(std::span<const Point> S, double r,
                                              const DecisionConfig& cfg = {});

}  // namespace twocenter

#endif  // TWOCENTER_DISTANT_HPP
