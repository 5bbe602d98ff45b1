#include "twocenter/nearby.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_set>

#include "twocenter/prefix_hulls.hpp"

namespace twocenter {

namespace {

struct Frame {
    Point e1;
    Point e2;
};

Frame frame_of(Axis axis) {
    return axis == Axis::X ? Frame{{1, 0}, {0, 1}} : Frame{{0, 1}, {-1, 0}};
}

double bbox_diagonal(std::span<const Point> S) {
    double x0 = S[0].x, x1 = S[0].x, y0 = S[0].y, y1 = S[0].y;
    for (const Point& p : S) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    return std::hypot(x1 - x0, y1 - y0);
}

Point separate_from_data(std::span<const Point> S, Point o) {
    const double d = bbox_diagonal(S);
    const double step = kEps * (d > 0 ? d : 1.0);
    for (int attempt = 0; attempt < 8; ++attempt) {
        if (std::none_of(S.begin(), S.end(), [&](const Point& p) { return p == o; })) break;
        o = o + Point{step, step * 0.5};
    }
    return o;
}

bool fits_union(const std::vector<Point>& a, const std::vector<Point>& b, double r) {
    thread_local std::vector<Point> buf;
    buf.assign(a.begin(), a.end());
    buf.insert(buf.end(), b.begin(), b.end());
    if (buf.empty()) return true;
    return meb(buf).radius <= r * (1.0 + kEps);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    return h;
}

struct SplitKey {
    std::uint64_t a;
    std::uint64_t b;
    bool operator==(const SplitKey&) const = default;
};

struct SplitKeyHash {
    std::size_t operator()(const SplitKey& k) const { return k.a ^ (k.b * 31); }
};

SplitKey key_of(const AngularSplit& s) {
    std::uint64_t a = static_cast<std::uint64_t>(s.axis) + 1;
    std::uint64_t b = 0x51ed270b27f1a3c5ULL;
    for (int i : s.plus) {
        a = mix(a, static_cast<std::uint64_t>(i));
        b = mix(b, static_cast<std::uint64_t>(i) * 7 + 3);
    }
    a = mix(a, 0xffffffffULL);
    b = mix(b, 0xfffffffeULL);
    for (int i : s.minus) {
        a = mix(a, static_cast<std::uint64_t>(i));
        b = mix(b, static_cast<std::uint64_t>(i) * 7 + 3);
    }
    return {a, b};
}

std::optional<TwoDiskSolution> solve_split(std::span<const Point> S, const AngularSplit& split,
                                           double r) {
    const auto hit = staircase_feasible(S, split, r);
    if (!hit) return std::nullopt;
    std::vector<char> mask(S.size(), 0);
    for (std::size_t k = 0; k < hit->i; ++k) mask[split.plus[k]] = 1;
    for (std::size_t k = 0; k < hit->j; ++k) mask[split.minus[k]] = 1;
    Branch br("nearby");
    br.axis = split.axis == Axis::X ? 0 : 1;
    br.o = split.o;
    return solution_from_mask(S, mask, r, br);
}

}  // namespace

AngularSplit make_split(std::span<const Point> S, Point o, Axis axis) {
    const Frame f = frame_of(axis);
    AngularSplit out;
    out.o = o;
    out.axis = axis;
    struct Key {
        double angle;
        double dist;
        int index;
    };
    std::vector<Key> up, down;
    for (std::size_t i = 0; i < S.size(); ++i) {
        const Point d = S[i] - o;
        const double lx = dot(d, f.e1);
        const double ly = dot(d, f.e2);
        const Key k{std::atan2(std::abs(ly), lx), norm(d), static_cast<int>(i)};
        (ly >= 0 ? up : down).push_back(k);
    }
    auto order = [](const Key& a, const Key& b) {
        if (a.angle != b.angle) return a.angle < b.angle;
        if (a.dist != b.dist) return a.dist < b.dist;
        return a.index < b.index;
    };
    std::sort(up.begin(), up.end(), order);
    std::sort(down.begin(), down.end(), order);
    for (const Key& k : up) out.plus.push_back(k.index);
    for (const Key& k : down) out.minus.push_back(k.index);
    return out;
}

std::optional<StaircaseHit> staircase_feasible(std::span<const Point> S, const AngularSplit& split,
                                               double r, StaircaseTrace* trace) {
    std::vector<Point> P, M;
    P.reserve(split.plus.size());
    M.reserve(split.minus.size());
    for (int i : split.plus) P.push_back(S[i]);
    for (int i : split.minus) M.push_back(S[i]);
    const std::size_t np = P.size();
    const std::size_t nm = M.size();

    const auto Pp = build_prefix_hulls(P, split.o, r, Winding::Ccw);
    const auto Mp = build_prefix_hulls(M, split.o, r, Winding::Cw);
    const auto Ps = build_suffix_hulls(P, split.o, r, Winding::Ccw);
    const auto Ms = build_suffix_hulls(M, split.o, r, Winding::Cw);

    std::size_t probes = 0;
    auto a_ok = [&](std::size_t i, std::size_t j) {
        ++probes;
        if (!Pp.exists(i) || !Mp.exists(j)) return false;
        return fits_union(Pp.vertices_at(i), Mp.vertices_at(j), r);
    };
    auto b_ok = [&](std::size_t i, std::size_t j) {
        ++probes;
        if (!Ps.exists(np - i) || !Ms.exists(nm - j)) return false;
        return fits_union(Ps.vertices_at(np - i), Ms.vertices_at(nm - j), r);
    };

    std::optional<StaircaseHit> hit;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(np);
    for (std::size_t j = 0; j <= nm; ++j) {
        while (i >= 0 && !a_ok(static_cast<std::size_t>(i), j)) --i;
        if (i < 0) break;
        if (trace) trace->i_of_j.push_back(i);
        if (b_ok(static_cast<std::size_t>(i), j)) {
            hit = StaircaseHit{static_cast<std::size_t>(i), j};
            break;
        }
    }
    if (trace) trace->probes = probes;
    return hit;
}

std::vector<Point> candidate_centers(std::span<const Point> S) {
    if (S.empty()) return {};
    const Point center = meb(S).center;
    std::vector<Point> out{center};
    const double d = bbox_diagonal(S);
    if (d == 0.0) return out;
    double x0 = S[0].x, y0 = S[0].y, x1 = S[0].x, y1 = S[0].y;
    for (const Point& p : S) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    const double step = d / 24.0;
    const int nx = static_cast<int>(std::floor((x1 - x0 + 4 * d) / step)) + 1;
    const int ny = static_cast<int>(std::floor((y1 - y0 + 4 * d) / step)) + 1;
    std::vector<std::pair<double, Point>> grid;
    grid.reserve(static_cast<std::size_t>(nx) * ny);
    for (int a = 0; a < nx; ++a) {
        for (int b = 0; b < ny; ++b) {
            const Point g{x0 - 2 * d + a * step, y0 - 2 * d + b * step};
            grid.push_back({dist2(g, center), g});
        }
    }
    std::stable_sort(grid.begin(), grid.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    for (const auto& g : grid) out.push_back(g.second);
    return out;
}

std::optional<TwoDiskSolution> decide_nearby(std::span<const Point> S, double r, Point o) {
    if (S.empty()) return std::nullopt;
    o = separate_from_data(S, o);
    for (Axis axis : {Axis::X, Axis::Y}) {
        if (auto sol = solve_split(S, make_split(S, o, axis), r)) return sol;
    }
    return std::nullopt;
}

std::optional<TwoDiskSolution> decide_nearby_all(std::span<const Point> S, double r,
                                                 const DecisionConfig& cfg) {
    if (S.empty()) return std::nullopt;
    const double reach = 2.0 * r * (1.0 + kEps);
    const std::vector<Point> hull = convex_hull(S);
    std::vector<Point> cands;
    for (const Point& c : candidate_centers(S)) {
        bool ok = true;
        for (const Point& p : hull) {
            if (dist(c, p) > reach) {
                ok = false;
                break;
            }
        }
        if (ok) cands.push_back(separate_from_data(S, c));
    }

    std::unordered_set<SplitKey, SplitKeyHash> seen;
    const int jobs = std::max(1, cfg.jobs);
    const std::size_t chunk = jobs == 1 ? 1 : static_cast<std::size_t>(4 * jobs);
    std::vector<AngularSplit> splits;
    std::vector<std::optional<TwoDiskSolution>> results;
    for (std::size_t begin = 0; begin < cands.size(); begin += chunk) {
        const std::size_t end = std::min(cands.size(), begin + chunk);
        splits.clear();
        for (std::size_t c = begin; c < end; ++c) {
            for (Axis axis : {Axis::X, Axis::Y}) {
                AngularSplit s = make_split(S, cands[c], axis);
                if (seen.insert(key_of(s)).second) splits.push_back(std::move(s));
            }
        }
        results.assign(splits.size(), std::nullopt);
        if (jobs == 1) {
            for (std::size_t k = 0; k < splits.size(); ++k) {
                results[k] = solve_split(S, splits[k], r);
                if (results[k]) return results[k];
            }
            continue;
        }
        const auto count = static_cast<std::ptrdiff_t>(splits.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
        for (std::ptrdiff_t k = 0; k < count; ++k) results[k] = solve_split(S, splits[k], r);
        for (auto& res : results) {
            if (res) return res;
        }
    }
    return std::nullopt;
}

}  // namespace twocenter
