#include "twocenter/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "twocenter/distant.hpp"
#include "twocenter/nearby.hpp"

namespace twocenter {

namespace {

constexpr std::size_t kOracleLimit = 16;
constexpr double kDefaultTol = 1e-9;

std::vector<Point> distinct_points(std::span<const Point> S) {
    std::vector<Point> U(S.begin(), S.end());
    std::sort(U.begin(), U.end());
    U.erase(std::unique(U.begin(), U.end()), U.end());
    return U;
}

// Disks become the minimum enclosing disks of the two parts; labels carry
// over from the distinct points to every input point.
TwoDiskSolution finalize(std::span<const Point> S, const std::vector<Point>& U, const TwoDiskSolution& sol) {
    std::vector<Point> a, b;
    for (std::size_t i = 0; i < U.size(); ++i) (sol.assignment[i] == 1 ? a : b).push_back(U[i]);
    TwoDiskSolution out;
    out.disk1 = a.empty() ? Disk{U[0], 0.0} : meb(a);
    out.disk2 = b.empty() ? Disk{U[0], 0.0} : meb(b);
    if (a.empty()) std::swap(out.disk1, out.disk2);
    out.radius = std::max(out.disk1.radius, out.disk2.radius);
    out.branch = sol.branch;
    out.assignment.resize(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
        const auto it = std::lower_bound(U.begin(), U.end(), S[i]);
        const int label = sol.assignment[it - U.begin()];
        out.assignment[i] = a.empty() ? 1 : label;
    }
    return out;
}

}  // namespace

TooLargeError::TooLargeError(std::size_t n)
    : std::runtime_error("oracle limited to " + std::to_string(kOracleLimit) + " points, got " +
                         std::to_string(n)) {}

std::vector<double> candidate_radii(std::span<const Point> S) {
    const std::size_t n = S.size();
    std::vector<double> out{0.0};
    out.reserve(1 + n * (n - 1) / 2 + (n >= 3 ? n * (n - 1) * (n - 2) / 6 : 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dij = dist(S[i], S[j]);
            out.push_back(0.5 * dij);
            for (std::size_t k = j + 1; k < n; ++k) {
                const double area2 = std::abs(orient(S[i], S[j], S[k]));
                if (area2 == 0.0) continue;
                out.push_back(dij * dist(S[j], S[k]) * dist(S[i], S[k]) / (2.0 * area2));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<TwoDiskSolution> feasible(std::span<const Point> S, double r, const DecisionConfig& cfg) {
    if (auto t = trivial_solution(S, r)) return t;
    if (auto sol = decide_nearby_all(S, r, cfg)) return sol;
    return decide_distant(S, r, cfg);
}

TwoDiskSolution solve_bisect(std::span<const Point> S, double tol, const DecisionConfig& cfg,
                             SolveStats* stats) {
    if (S.empty()) throw EmptyInputError("solve needs at least one point");
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    const std::vector<Point> U = distinct_points(S);
    SolveStats local;
    SolveStats& st = stats ? *stats : local;
    st.bisected = true;

    const double top = meb(U).radius;
    auto best = trivial_solution(U, top);
    st.probes.push_back({top, true});
    double lo = 0.0;
    double hi = top;
    if (auto zero = feasible(U, 0.0, cfg)) {
        st.probes.push_back({0.0, true});
        return finalize(S, U, *zero);
    }
    st.probes.push_back({0.0, false});
    while (hi - lo > tol * top) {
        const double mid = 0.5 * (lo + hi);
        auto sol = feasible(U, mid, cfg);
        st.probes.push_back({mid, sol.has_value()});
        if (sol) {
            hi = mid;
            best = std::move(sol);
        } else {
            lo = mid;
        }
    }
    for (std::size_t a = 0; a < st.probes.size(); ++a) {
        for (std::size_t b = 0; b < st.probes.size(); ++b) {
            if (st.probes[a].second && !st.probes[b].second && st.probes[a].first < st.probes[b].first) {
                st.monotonicity_violation = true;
            }
        }
    }
    return finalize(S, U, *best);
}

TwoDiskSolution solve(std::span<const Point> S, const SolveConfig& cfg, SolveStats* stats) {
    if (S.empty()) throw EmptyInputError("solve needs at least one point");
    const std::vector<Point> U = distinct_points(S);
    if (cfg.tol || U.size() > cfg.exact_limit) {
        return solve_bisect(S, cfg.tol.value_or(kDefaultTol), cfg.decision, stats);
    }
    SolveStats local;
    SolveStats& st = stats ? *stats : local;

    const std::vector<double> C = candidate_radii(U);
    const double top = meb(U).radius;
    std::ptrdiff_t hi = std::lower_bound(C.begin(), C.end(), top * (1.0 - 1e-12)) - C.begin();
    hi = std::min<std::ptrdiff_t>(hi, static_cast<std::ptrdiff_t>(C.size()) - 1);
    auto probe = [&](std::ptrdiff_t m) {
        auto sol = feasible(U, C[m], cfg.decision);
        st.probes.push_back({C[m], sol.has_value()});
        return sol;
    };

    auto best = probe(hi);
    if (!best) {
        // The top candidate must be feasible; scan the whole ladder instead.
        st.monotonicity_violation = true;
        for (std::size_t m = 0; m < C.size() && !best; ++m) best = probe(static_cast<std::ptrdiff_t>(m));
        return finalize(S, U, *best);
    }
    std::ptrdiff_t lo = -1;
    while (hi - lo > 1) {
        const std::ptrdiff_t mid = lo + (hi - lo) / 2;
        if (auto sol = probe(mid)) {
            hi = mid;
            best = std::move(sol);
        } else {
            lo = mid;
        }
    }
    return finalize(S, U, *best);
}

TwoDiskSolution oracle_solve(std::span<const Point> S) {
    const std::size_t n = S.size();
    if (n == 0) throw EmptyInputError("oracle needs at least one point");
    if (n > kOracleLimit) throw TooLargeError(n);
    TwoDiskSolution best;
    best.radius = std::numeric_limits<double>::infinity();
    std::vector<Point> a, b;
    const std::uint32_t masks = 1u << (n - 1);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        a.clear();
        b.clear();
        for (std::size_t i = 0; i < n; ++i) ((i == 0 || !(mask >> (i - 1) & 1)) ? a : b).push_back(S[i]);
        const Disk da = meb(a);
        const Disk db = b.empty() ? Disk{S[0], 0.0} : meb(b);
        const double r = std::max(da.radius, db.radius);
        if (r < best.radius) {
            best.radius = r;
            best.disk1 = da;
            best.disk2 = db;
            best.assignment.assign(n, 1);
            for (std::size_t i = 1; i < n; ++i) best.assignment[i] = (mask >> (i - 1) & 1) ? 2 : 1;
        }
    }
    best.branch = Branch("oracle");
    return best;
}

}  // namespace twocenter
