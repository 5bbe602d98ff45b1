#include "twocenter/solution.hpp"

namespace twocenter {

bool assign(std::span<const Point> S, TwoDiskSolution& sol, double eps) {
    sol.assignment.assign(S.size(), 0);
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (sol.disk1.contains(S[i], eps)) {
            sol.assignment[i] = 1;
        } else if (sol.disk2.contains(S[i], eps)) {
            sol.assignment[i] = 2;
        } else {
            return false;
        }
    }
    return true;
}

bool verify(std::span<const Point> S, const TwoDiskSolution& sol, double r, double eps) {
    const double cap = r * (1.0 + eps);
    if (sol.disk1.radius > cap || sol.disk2.radius > cap) return false;
    for (const Point& p : S) {
        if (!sol.disk1.contains(p, eps) && !sol.disk2.contains(p, eps)) return false;
    }
    return true;
}

std::optional<TwoDiskSolution> solution_from_mask(std::span<const Point> S,
                                                  const std::vector<char>& in_first, double r,
                                                  Branch branch) {
    if (S.empty()) return std::nullopt;
    std::vector<Point> a;
    std::vector<Point> b;
    for (std::size_t i = 0; i < S.size(); ++i) (in_first[i] ? a : b).push_back(S[i]);
    TwoDiskSolution sol;
    sol.disk1 = a.empty() ? Disk{S[0], 0.0} : meb(a);
    sol.disk2 = b.empty() ? Disk{S[0], 0.0} : meb(b);
    sol.radius = r;
    sol.branch = std::move(branch);
    if (!verify(S, sol, r) || !assign(S, sol)) return std::nullopt;
    return sol;
}

std::optional<TwoDiskSolution> trivial_solution(std::span<const Point> S, double r) {
    if (S.empty()) return std::nullopt;
    if (S.size() == 2 && meb(S).radius > r * (1.0 + kEps)) {
        return solution_from_mask(S, {1, 0}, r, Branch("trivial"));
    }
    if (meb(S).radius > r * (1.0 + kEps)) return std::nullopt;
    return solution_from_mask(S, std::vector<char>(S.size(), 1), r, Branch("trivial"));
}

}  // namespace twocenter
