#include "twocenter/distant.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <unordered_set>

#include "twocenter/nearby.hpp"
#include "twocenter/prefix_hulls.hpp"

namespace twocenter {

namespace {

constexpr int kGridLines = 26;

std::vector<std::pair<double, double>> line_pairs(std::span<const Point> R) {
    std::vector<double> xs;
    xs.reserve(R.size());
    for (const Point& p : R) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    const double lo = xs.front();
    const double W = xs.back() - lo;
    double gap_line = lo;
    double gap = -1.0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] - xs[i - 1] > gap) {
            gap = xs[i] - xs[i - 1];
            gap_line = 0.5 * (xs[i] + xs[i - 1]);
        }
    }
    std::vector<std::pair<double, double>> out{{gap_line, gap_line}};
    std::vector<double> grid(kGridLines);
    for (int k = 0; k < kGridLines; ++k) grid[k] = lo + W * k / (kGridLines - 1);
    for (int a = 0; a < kGridLines; ++a) {
        for (int b = a + 1; b < kGridLines; ++b) out.push_back({grid[a], grid[b]});
    }
    return out;
}

bool fits(std::span<const Point> pts, double r) {
    return pts.empty() || meb(pts).radius <= r * (1.0 + kEps);
}

std::vector<Point> gather(std::span<const Point> S, const std::vector<int>& idx) {
    std::vector<Point> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(S[i]);
    return out;
}

Point apply_variant(int v, Point p) {
    switch (v) {
        case 1: return {p.x, -p.y};
        case 2: return {-p.x, -p.y};
        case 3: return {-p.x, p.y};
        default: return p;
    }
}

bool reflects(int v) { return v == 1 || v == 3; }

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct SetKey {
    std::uint64_t a;
    std::uint64_t b;
    bool operator==(const SetKey&) const = default;
};

struct SetKeyHash {
    std::size_t operator()(const SetKey& k) const { return k.a ^ (k.b << 1); }
};

// Order-independent fingerprint of (s1, s2).
SetKey key_of(std::span<const int> s1, std::span<const int> s2) {
    std::uint64_t a = s1.size() * 0x100000001b3ULL + s2.size();
    std::uint64_t b = 0;
    for (int i : s1) {
        a += splitmix(static_cast<std::uint64_t>(i) * 2);
        b ^= splitmix(static_cast<std::uint64_t>(i) * 2 + 0x5555);
    }
    for (int i : s2) {
        a += splitmix(static_cast<std::uint64_t>(i) * 2 + 1);
        b ^= splitmix(static_cast<std::uint64_t>(i) * 2 + 0xaaaa);
    }
    return {a, b};
}

// Longest prefix of `order` whose points fit in a radius-r disk.
std::size_t longest_fitting_prefix(std::span<const Point> R, const std::vector<int>& order, double r) {
    std::size_t lo = 0, hi = order.size();
    std::vector<Point> buf;
    while (lo < hi) {
        const std::size_t mid = (lo + hi + 1) / 2;
        buf.clear();
        for (std::size_t k = 0; k < mid; ++k) buf.push_back(R[order[k]]);
        if (fits(buf, r)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

// Per-point flags for a split. Points of s1 lie in CR1 and points of s2 in CR2.
enum : unsigned char { kIn1 = 1, kIn2 = 2, kCov1 = 4, kCov2 = 8 };

unsigned char swap_roles(unsigned char f) {
    return static_cast<unsigned char>(((f & kIn1) << 1) | ((f & kIn2) >> 1) | ((f & kCov1) << 1) |
                                      ((f & kCov2) >> 1));
}

// Flags for every point, or nullopt when some point lies in neither coverage.
// Recent offenders are tested first so that failing splits fail fast.
std::optional<std::vector<unsigned char>> classify(std::span<const Point> S, const std::vector<int>& s1,
                                                   const std::vector<int>& s2,
                                                   const std::vector<Point>& hull1,
                                                   const std::vector<Point>& hull2, double r) {
    const auto h1 = hull_of(hull1, r);
    const auto h2 = hull_of(hull2, r);
    if (!h1 || !h2) return std::nullopt;
    const CoverageTester t1(*h1), t2(*h2);

    std::vector<unsigned char> flags(S.size(), 0);
    for (int i : s1) flags[i] |= kIn1 | kCov1;
    for (int i : s2) flags[i] |= kIn2 | kCov2;

    thread_local std::vector<int> recent;
    auto fill = [&](std::size_t i) {
        unsigned char& f = flags[i];
        if (!(f & kCov1) && t1.contains(S[i])) f |= kCov1;
        if (!(f & kCov2) && t2.contains(S[i])) f |= kCov2;
        return (f & (kCov1 | kCov2)) != 0;
    };
    for (int i : recent) {
        if (static_cast<std::size_t>(i) < S.size() && !fill(static_cast<std::size_t>(i))) return std::nullopt;
    }
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (!fill(i)) {
            recent.insert(recent.begin(), static_cast<int>(i));
            if (recent.size() > 8) recent.pop_back();
            return std::nullopt;
        }
    }
    return flags;
}

MutualCoverageSeq order_around(std::span<const Point> P, Point o1, const std::vector<unsigned char>& flags) {
    MutualCoverageSeq out;
    out.o1 = o1;
    struct Key {
        double angle;
        double dist;
        int index;
        bool mutual;
    };
    std::vector<Key> keys;
    for (std::size_t i = 0; i < P.size(); ++i) {
        if ((flags[i] & kIn1) || !(flags[i] & kCov1)) continue;
        const Point d = P[i] - o1;
        keys.push_back({std::atan2(d.y, d.x), norm(d), static_cast<int>(i), (flags[i] & kCov2) != 0});
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        if (a.angle != b.angle) return a.angle < b.angle;
        if (a.dist != b.dist) return a.dist < b.dist;
        return a.index < b.index;
    });
    for (const Key& k : keys) {
        if (k.mutual) {
            out.seq.push_back(k.index);
            out.seq_pos.push_back(static_cast<int>(out.order.size()));
        }
        out.order.push_back(k.index);
        out.mutual.push_back(k.mutual);
    }
    return out;
}

std::ptrdiff_t prefix_k(std::span<const Point> P, const std::vector<Point>& base, const MutualCoverageSeq& seq,
                        double r) {
    std::vector<Point> T, E;
    std::vector<std::size_t> excl_before(seq.order.size() + 1, 0);
    for (std::size_t k = 0; k < seq.order.size(); ++k) {
        T.push_back(P[seq.order[k]]);
        excl_before[k + 1] = excl_before[k] + (seq.mutual[k] ? 0 : 1);
        if (!seq.mutual[k]) E.push_back(P[seq.order[k]]);
    }
    // Both ends of the search first; they need no hull structures.
    auto fits_with = [&](const std::vector<Point>& extra) {
        std::vector<Point> pts = base;
        const auto h = convex_hull(extra);
        pts.insert(pts.end(), h.begin(), h.end());
        return fits(pts, r);
    };
    if (!fits_with(E)) return -1;
    if (fits_with(T)) return static_cast<std::ptrdiff_t>(seq.seq.size());

    const auto tpre = build_prefix_hulls(T, seq.o1, r, Winding::Ccw);
    const auto esuf = build_suffix_hulls(E, seq.o1, r, Winding::Ccw);

    std::vector<Point> buf;
    // Probe k: s1, order[0, p) with p just past the k-th mutual point, and
    // the exclusive points after p. The sets grow with k, so existence is
    // nonincreasing and binary search applies.
    auto probe = [&](std::size_t k) {
        const std::size_t p = k == 0 ? 0 : static_cast<std::size_t>(seq.seq_pos[k - 1]) + 1;
        const std::size_t after = E.size() - excl_before[p];
        if (!tpre.exists(p) || !esuf.exists(after)) return false;
        buf = base;
        const auto a = tpre.vertices_at(p);
        const auto b = esuf.vertices_at(after);
        buf.insert(buf.end(), a.begin(), a.end());
        buf.insert(buf.end(), b.begin(), b.end());
        return fits(buf, r);
    };
    if (!probe(0)) return -1;
    std::size_t lo = 0, hi = seq.seq.size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi + 1) / 2;
        if (probe(mid)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return static_cast<std::ptrdiff_t>(lo);
}

// Canonical subcase in frame P: base holds the convex hull vertices of s1.
std::optional<SubcaseTwoWitness> canonical(std::span<const Point> P, const std::vector<int>& s1,
                                           std::vector<Point> base, const std::vector<unsigned char>& flags,
                                           double r) {
    const MutualCoverageSeq mc = order_around(P, P[s1.front()], flags);
    const std::ptrdiff_t k = prefix_k(P, base, mc, r);
    if (k < 0) return std::nullopt;

    std::vector<Point> Q = base;
    for (std::size_t p = 0; p < mc.order.size(); ++p) {
        if (!mc.mutual[p]) Q.push_back(P[mc.order[p]]);
    }
    for (std::ptrdiff_t m = 0; m < k; ++m) Q.push_back(P[mc.seq[m]]);
    const auto H = hull_of(Q, r);
    if (!H) return std::nullopt;

    // A vertex of the hull of Q that belongs to s1 is extreme in s1.
    std::sort(base.begin(), base.end());
    auto in_s1 = [&](Point p) { return std::binary_search(base.begin(), base.end(), p); };

    const auto verts = H->vertices();
    const std::size_t m = verts.size();
    std::vector<std::size_t> arcs;
    for (std::size_t i = 0; i < m && m >= 2; ++i) {
        if (in_s1(verts[i]) && !in_s1(verts[(i + 1) % m])) {
            arcs.push_back(i);
            break;
        }
    }
    if (arcs.empty()) {
        for (std::size_t i = 0; i < m && m >= 2; ++i) arcs.push_back(i);
    }

    std::vector<Point> rest;
    auto finish = [&](Disk d1, Arc gamma) -> std::optional<SubcaseTwoWitness> {
        rest.clear();
        for (const Point& p : P) {
            if (!d1.contains(p)) rest.push_back(p);
        }
        const Disk d2 = rest.empty() ? Disk{P[0], 0.0} : meb(rest);
        if (d2.radius > r * (1.0 + kEps)) return std::nullopt;
        SubcaseTwoWitness w{d1, d2, gamma, static_cast<std::size_t>(k), {}};
        for (const Point& p : P) w.assignment.push_back(d1.contains(p) ? 1 : 2);
        return w;
    };
    if (m == 1) return finish(Disk{verts[0], r}, Arc{verts[0], r, 0.0, 0.0, Winding::Ccw});
    for (std::size_t i : arcs) {
        const Point c = H->arc_center(i);
        if (auto w = finish(Disk{c, r}, make_ccw_arc(c, r, verts[i], verts[(i + 1) % m]))) return w;
    }
    return std::nullopt;
}

// Any two-disk with s1 in D1 and s2 in D2 puts the points outside CR2 into D1
// and those outside CR1 into D2. Failure persists when s1 or s2 grows.
bool sides_fit(std::span<const Point> R, const std::vector<Point>& hull1, const std::vector<Point>& hull2,
               const std::vector<unsigned char>& flags, double r) {
    std::vector<Point> a = hull1, b = hull2;
    for (std::size_t i = 0; i < R.size(); ++i) {
        if (!(flags[i] & kCov2)) a.push_back(R[i]);
        if (!(flags[i] & kCov1)) b.push_back(R[i]);
    }
    return fits(a, r) && fits(b, r);
}

std::optional<SubcaseTwoWitness> subcase2_with(std::span<const Point> R, const std::vector<int>& s1,
                                               const std::vector<int>& s2, const std::vector<Point>& hull1,
                                               const std::vector<Point>& hull2,
                                               const std::vector<unsigned char>* flags, double r, int* variant) {
    std::vector<unsigned char> swapped(flags->size());
    std::transform(flags->begin(), flags->end(), swapped.begin(), swap_roles);

    std::vector<Point> P(R.size());
    std::vector<Point> base;
    for (int v = 0; v < 4; ++v) {
        const bool swap = v >= 2;
        for (std::size_t i = 0; i < R.size(); ++i) P[i] = apply_variant(v, R[i]);
        base.clear();
        for (const Point& p : swap ? hull2 : hull1) base.push_back(apply_variant(v, p));
        auto w = canonical(P, swap ? s2 : s1, base, swap ? swapped : *flags, r);
        if (!w) continue;
        w->d1.center = apply_variant(v, w->d1.center);
        w->d2.center = apply_variant(v, w->d2.center);
        const Point a = apply_variant(v, w->gamma.start());
        const Point b = apply_variant(v, w->gamma.end());
        const Point c = apply_variant(v, w->gamma.center);
        if (w->gamma.extent() > 0) {
            w->gamma = reflects(v) ? make_ccw_arc(c, r, b, a) : make_ccw_arc(c, r, a, b);
        } else {
            w->gamma.center = c;
        }
        if (variant) *variant = v;
        return w;
    }
    return std::nullopt;
}

std::optional<SubcaseTwoWitness> subcase2(std::span<const Point> R, const std::vector<int>& s1,
                                          const std::vector<int>& s2, const std::vector<Point>& hull1,
                                          const std::vector<Point>& hull2, double r, int* variant) {
    const auto flags = classify(R, s1, s2, hull1, hull2, r);
    if (!flags) return std::nullopt;
    return subcase2_with(R, s1, s2, hull1, hull2, &*flags, r, variant);
}

}  // namespace

std::vector<SplitPair> candidate_line_pairs(std::span<const Point> R) {
    std::vector<SplitPair> out;
    if (R.empty()) return out;
    for (const auto& [l1, l2] : line_pairs(R)) {
        SplitPair sp;
        sp.l1 = l1;
        sp.l2 = l2;
        for (std::size_t i = 0; i < R.size(); ++i) {
            const int idx = static_cast<int>(i);
            if (R[i].x <= l1) {
                sp.s1.push_back(idx);
            } else if (R[i].x > l2) {
                sp.s2.push_back(idx);
            } else {
                sp.mid.push_back(idx);
            }
        }
        out.push_back(std::move(sp));
    }
    return out;
}

std::optional<MutualCoverageSeq> mutual_coverage(std::span<const Point> S, const std::vector<int>& s1,
                                                 const std::vector<int>& s2, double r) {
    if (s1.empty() || s2.empty()) return std::nullopt;
    const auto flags = classify(S, s1, s2, convex_hull(gather(S, s1)), convex_hull(gather(S, s2)), r);
    if (!flags) return std::nullopt;
    return order_around(S, S[s1.front()], *flags);
}

std::ptrdiff_t largest_prefix_k(std::span<const Point> S, const std::vector<int>& s1,
                                const MutualCoverageSeq& seq, double r) {
    return prefix_k(S, convex_hull(gather(S, s1)), seq, r);
}

std::optional<SubcaseTwoWitness> decide_subcase2_canonical(std::span<const Point> S,
                                                           const std::vector<int>& s1,
                                                           const std::vector<int>& s2, double r) {
    if (s1.empty() || s2.empty()) return std::nullopt;
    const auto hull1 = convex_hull(gather(S, s1));
    const auto flags = classify(S, s1, s2, hull1, convex_hull(gather(S, s2)), r);
    if (!flags) return std::nullopt;
    return canonical(S, s1, hull1, *flags, r);
}

std::optional<SubcaseTwoWitness> decide_subcase2(std::span<const Point> R, const SplitPair& split,
                                                 double r, int* variant) {
    if (split.s1.empty() || split.s2.empty()) return std::nullopt;
    return subcase2(R, split.s1, split.s2, convex_hull(gather(R, split.s1)), convex_hull(gather(R, split.s2)),
                    r, variant);
}

std::optional<TwoDiskSolution> decide_subcase1(std::span<const Point> S, const SplitPair& split,
                                               double r) {
    if (split.s1.empty() || split.s2.empty()) return std::nullopt;
    const auto a = convex_hull(gather(S, split.s1));
    const auto b = convex_hull(gather(S, split.s2));
    const auto fp = farthest_pair_bichromatic(a, b);
    auto sol = decide_nearby(S, r, fp.midpoint);
    if (sol) sol->branch.kind = "distant-subcase1";
    return sol;
}

std::optional<TwoDiskSolution> decide_distant(std::span<const Point> S, double r,
                                              const DecisionConfig& cfg) {
    if (S.empty()) return std::nullopt;
    if (auto t = trivial_solution(S, r)) return t;

    struct Job {
        int rotation;
        int pair;
        std::vector<int> s1;
        std::vector<int> s2;
        std::vector<Point> hull1;  // rotated frame
        std::vector<Point> hull2;
        std::vector<unsigned char> flags;
        std::optional<Point> o;  // subcase-1 center, unless already tried
    };

    double x0 = S[0].x, x1 = S[0].x, y0 = S[0].y, y1 = S[0].y;
    for (const Point& p : S) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    const double quantum = 1e-12 * std::max(std::hypot(x1 - x0, y1 - y0), 1e-300);
    auto snap = [&](Point p) {
        return std::pair(std::llround(p.x / quantum), std::llround(p.y / quantum));
    };
    struct PairHash {
        std::size_t operator()(const std::pair<long long, long long>& q) const {
            return splitmix(static_cast<std::uint64_t>(q.first) ^ splitmix(static_cast<std::uint64_t>(q.second)));
        }
    };

    std::unordered_set<SetKey, SetKeyHash> seen;
    std::unordered_set<std::pair<long long, long long>, PairHash> tried_o;
    const int jobs = std::max(1, cfg.jobs);
    const std::size_t chunk = jobs == 1 ? 1 : static_cast<std::size_t>(4 * jobs);
    const int K = std::max(1, cfg.rotations);

    std::vector<std::vector<Point>> frames(K);
    std::vector<Job> batch;
    std::vector<std::optional<TwoDiskSolution>> results;

    auto evaluate = [&](const Job& job) -> std::optional<TwoDiskSolution> {
        if (job.o) {
            if (auto sol = decide_nearby(S, r, *job.o)) {
                sol->branch.kind = "distant-subcase1";
                sol->branch.rotation = job.rotation;
                sol->branch.pair = job.pair;
                return sol;
            }
        }
        int variant = -1;
        const auto w =
            subcase2_with(frames[job.rotation], job.s1, job.s2, job.hull1, job.hull2, &job.flags, r, &variant);
        if (!w) return std::nullopt;
        const RotationFrame f = RotationFrame::make(job.rotation, K);
        TwoDiskSolution sol;
        sol.disk1 = Disk{rotate(w->d1.center, f.angle), w->d1.radius};
        sol.disk2 = Disk{rotate(w->d2.center, f.angle), w->d2.radius};
        sol.radius = r;
        sol.branch = Branch("distant-subcase2");
        sol.branch.rotation = job.rotation;
        sol.branch.pair = job.pair;
        sol.branch.variant = variant;
        if (!verify(S, sol, r) || !assign(S, sol)) return std::nullopt;
        return sol;
    };

    auto flush = [&]() -> std::optional<TwoDiskSolution> {
        results.assign(batch.size(), std::nullopt);
        const auto count = static_cast<std::ptrdiff_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs) if (jobs > 1)
        for (std::ptrdiff_t k = 0; k < count; ++k) results[k] = evaluate(batch[k]);
        batch.clear();
        for (auto& res : results) {
            if (res) return res;
        }
        return std::nullopt;
    };

    std::vector<Point> sorted;
    for (int k = 0; k < K; ++k) {
        const RotationFrame frame = RotationFrame::make(k, K);
        frames[k] = rotate_frame(S, frame);
        const auto& R = frames[k];
        std::vector<int> by_x(R.size());
        std::iota(by_x.begin(), by_x.end(), 0);
        std::stable_sort(by_x.begin(), by_x.end(), [&](int a, int b) { return R[a] < R[b]; });
        sorted.clear();
        for (int i : by_x) sorted.push_back(R[i]);
        std::vector<int> rev(by_x.rbegin(), by_x.rend());
        const std::size_t fit_left = longest_fitting_prefix(R, by_x, r);
        const std::size_t fit_right = longest_fitting_prefix(R, rev, r);

        const auto pairs = line_pairs(R);
        std::vector<std::pair<std::size_t, std::size_t>> failed;
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            const auto [l1, l2] = pairs[pi];
            auto above = [&](double l) {
                return static_cast<std::size_t>(
                    std::upper_bound(sorted.begin(), sorted.end(), l, [](double x, const Point& p) { return x < p.x; }) -
                    sorted.begin());
            };
            const std::size_t c1 = above(l1);
            const std::size_t c2 = R.size() - above(l2);
            if (c1 == 0 || c2 == 0 || c1 > fit_left || c2 > fit_right) continue;
            if (std::any_of(failed.begin(), failed.end(),
                            [&](const auto& f) { return f.first <= c1 && f.second <= c2; })) {
                continue;
            }
            const std::span<const int> left(by_x.data(), c1);
            const std::span<const int> right(by_x.data() + (R.size() - c2), c2);
            if (!seen.insert(key_of(left, right)).second) continue;

            Job job{k, static_cast<int>(pi), {left.begin(), left.end()}, {right.begin(), right.end()}, {}, {},
                    {}, std::nullopt};
            std::sort(job.s1.begin(), job.s1.end());
            std::sort(job.s2.begin(), job.s2.end());
            job.hull1 = convex_hull_sorted(std::span<const Point>(sorted.data(), c1));
            job.hull2 = convex_hull_sorted(std::span<const Point>(sorted.data() + (R.size() - c2), c2));
            auto flags = classify(R, job.s1, job.s2, job.hull1, job.hull2, r);
            if (!flags || !sides_fit(R, job.hull1, job.hull2, *flags, r)) {
                failed.push_back({c1, c2});
                continue;
            }
            job.flags = std::move(*flags);
            const auto fp = farthest_pair_bichromatic(job.hull1, job.hull2);
            if (tried_o.insert(snap(rotate(fp.midpoint, frame.angle))).second) {
                job.o = rotate(fp.midpoint, frame.angle);
            }
            batch.push_back(std::move(job));
            if (batch.size() >= chunk) {
                if (auto sol = flush()) return sol;
            }
        }
    }
    if (!batch.empty()) return flush();
    return std::nullopt;
}

}  // namespace twocenter
