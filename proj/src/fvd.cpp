#include "twocenter/fvd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace twocenter {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Point raw_circumcenter(Point a, Point b, Point c) {
    const Point ab = b - a;
    const Point ac = c - a;
    const double det = 2.0 * cross(ab, ac);
    const double ab2 = norm2(ab);
    const double ac2 = norm2(ac);
    return a + Point{(ac.y * ab2 - ab.y * ac2) / det, (ab.x * ac2 - ac.x * ab2) / det};
}

struct Line {
    double a;  // value at t = 0
    double b;  // slope
};

struct Bisector {
    Point m;
    Point n;
    double h2;

    Bisector(Point x, Point y) {
        if (x == y) throw DegenerateError("two-boundary query with x == y");
        m = midpoint(x, y);
        const Point d = y - x;
        n = perp(d) * (1.0 / norm(d));
        h2 = 0.25 * norm2(d);
    }

    Point at(double t) const { return m + n * t; }

    // |c(t) - s|^2 - |c(t) - x|^2, linear in t.
    Line line(Point s) const { return {dist2(m, s) - h2, 2.0 * dot(n, m - s)}; }

    double tol(Point s, double t) const { return 1e-12 * (h2 + t * t + dist2(m, s)); }
};

// Clip [lo, hi] by a + b t <= 0.
bool clip(BisectorInterval& iv, const Bisector& bs, Point s) {
    const Line l = bs.line(s);
    if (l.b > 0) {
        const double t = -l.a / l.b;
        if (t < iv.hi) {
            iv.hi = t;
            iv.hi_site = s;
        }
    } else if (l.b < 0) {
        const double t = -l.a / l.b;
        if (t > iv.lo) {
            iv.lo = t;
            iv.lo_site = s;
        }
    } else if (l.a > bs.tol(s, 0.0)) {
        return false;
    }
    return true;
}

bool settle(BisectorInterval& iv, double h2) {
    if (iv.lo <= iv.hi) return true;
    const double scale = std::sqrt(h2) + std::abs(iv.lo) + std::abs(iv.hi);
    if (iv.lo - iv.hi > 1e-9 * scale) return false;
    const double mid = 0.5 * (iv.lo + iv.hi);
    iv.lo = iv.hi = mid;
    return true;
}

BisectorInterval scan_interval_or_empty(std::span<const Point> sites, const Bisector& bs, bool& ok) {
    BisectorInterval iv{-kInf, kInf, std::nullopt, std::nullopt};
    ok = true;
    for (const Point& s : sites) {
        if (!clip(iv, bs, s)) {
            ok = false;
            return iv;
        }
    }
    ok = settle(iv, bs.h2);
    return iv;
}

TwoBoundaryDisk pick(const Bisector& bs, const BisectorInterval& iv, double t) {
    TwoBoundaryDisk out;
    out.t = t;
    out.disk = Disk{bs.at(t), std::sqrt(bs.h2 + t * t)};
    if (t == iv.lo && iv.lo_site) out.support = iv.lo_site;
    if (t == iv.hi && iv.hi_site) out.support = iv.hi_site;
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

FvdTree build_fvd(std::span<const Point> Q) {
    FvdTree f;
    f.sites_ = convex_hull(Q);
    const int m = static_cast<int>(f.sites_.size());
    if (m < 3) return f;
    const auto& S = f.sites_;

    std::vector<int> prev(m), next(m), owner(m, -1), stamp(m, 0);
    for (int i = 0; i < m; ++i) {
        prev[i] = (i + m - 1) % m;
        next[i] = (i + 1) % m;
    }
    // owner[i]: triangle that created the current polygon edge i -> next[i].
    auto ear_radius = [&](int i) { return dist(raw_circumcenter(S[prev[i]], S[i], S[next[i]]), S[i]); };
    using Entry = std::pair<double, std::pair<int, int>>;  // radius, (stamp, vertex)
    std::priority_queue<Entry> heap;
    for (int i = 0; i < m; ++i) heap.push({ear_radius(i), {0, -i}});

    std::vector<char> gone(m, 0);
    int remaining = m;
    auto emit = [&](int a, int b, int c) {
        const int id = static_cast<int>(f.tris_.size());
        f.tris_.push_back({a, b, c});
        f.adj_.push_back({owner[a], owner[b], -1});
        f.centers_.push_back(raw_circumcenter(S[a], S[b], S[c]));
        for (int k = 0; k < 2; ++k) {
            const int o = f.adj_[id][k];
            if (o >= 0) f.adj_[o][2] = id;  // side 2 of o is the diagonal it created
        }
        return id;
    };
    auto encloses = [&](int i) {
        const Point c = raw_circumcenter(S[prev[i]], S[i], S[next[i]]);
        const double r = dist(c, S[i]) * (1.0 + 1e-9);
        for (int j = next[next[i]]; j != prev[i]; j = next[j]) {
            if (dist(c, S[j]) > r) return false;
        }
        return true;
    };

    std::vector<Entry> deferred;
    while (remaining > 3) {
        int pickv = -1;
        deferred.clear();
        while (!heap.empty()) {
            const Entry e = heap.top();
            heap.pop();
            const int i = -e.second.second;
            if (gone[i] || e.second.first != stamp[i]) continue;
            if (encloses(i)) {
                pickv = i;
                break;
            }
            deferred.push_back(e);
        }
        if (pickv < 0) {
            // Numerically no ear passed; take the largest one.
            pickv = -deferred.front().second.second;
            deferred.erase(deferred.begin());
        }
        for (const Entry& e : deferred) heap.push(e);

        const int a = prev[pickv];
        const int c = next[pickv];
        const int id = emit(a, pickv, c);
        gone[pickv] = 1;
        next[a] = c;
        prev[c] = a;
        owner[a] = id;
        --remaining;
        for (int v : {a, c}) {
            ++stamp[v];
            heap.push({ear_radius(v), {stamp[v], -v}});
        }
    }
    int a = 0;
    while (gone[a]) ++a;
    const int b = next[a];
    const int c = next[b];
    const int id = emit(a, b, c);
    f.adj_[id][2] = owner[c];
    if (owner[c] >= 0) f.adj_[owner[c]][2] = id;
    return f;
}

int FvdTree::farthest_site_scan(Point c) const {
    int best = -1;
    double bd = -1.0;
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        const double d = dist2(c, sites_[i]);
        if (d > bd) {
            bd = d;
            best = static_cast<int>(i);
        }
    }
    return best;
}

CentroidTree build_centroid_tree(const FvdTree& fvd) {
    CentroidTree ct;
    const std::size_t N = fvd.vertex_count();
    ct.child_.assign(N, {-1, -1, -1});
    ct.depth_.assign(N, 0);
    if (N == 0) return ct;

    std::vector<char> removed(N, 0);
    std::vector<int> size(N, 0), parent(N, -1), order;
    order.reserve(N);

    auto decompose = [&](auto&& self, int start, int depth) -> int {
        order.clear();
        order.push_back(start);
        parent[start] = -1;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const int x = order[head];
            for (int k = 0; k < 3; ++k) {
                const int y = fvd.neighbor(x, k);
                if (y >= 0 && !removed[y] && y != parent[x]) {
                    parent[y] = x;
                    order.push_back(y);
                }
            }
        }
        const int total = static_cast<int>(order.size());
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            size[*it] = 1;
            for (int k = 0; k < 3; ++k) {
                const int y = fvd.neighbor(*it, k);
                if (y >= 0 && !removed[y] && y != parent[*it]) size[*it] += size[y];
            }
        }
        int centroid = start;
        for (int x : order) {
            int worst = total - size[x];
            for (int k = 0; k < 3; ++k) {
                const int y = fvd.neighbor(x, k);
                if (y >= 0 && !removed[y] && y != parent[x]) worst = std::max(worst, size[y]);
            }
            if (2 * worst <= total) {
                centroid = x;
                break;
            }
        }
        removed[centroid] = 1;
        ct.depth_[centroid] = depth;
        ct.height_ = std::max(ct.height_, depth + 1);
        for (int k = 0; k < 3; ++k) {
            const int y = fvd.neighbor(centroid, k);
            if (y >= 0 && !removed[y]) ct.child_[centroid][k] = self(self, y, depth + 1);
        }
        return centroid;
    };
    ct.root_ = decompose(decompose, 0, 0);
    return ct;
}

// At a diagram vertex v with sites (a, b, d) ccw, the triangle vertex farthest
// from c is the one minimizing u.(s - v) for u = c - v. The true farthest site
// is that vertex or lies on the chain beyond the adjacent side toward which -u
// turns, so each step follows exactly one child and keeps the three vertices
// as candidates.
int CentroidTree::descend(const FvdTree& fvd, Point c, bool at_infinity) const {
    const auto S = fvd.sites();
    if (S.empty()) return -1;
    if (root_ < 0) {
        int best = 0;
        for (int i = 1; i < static_cast<int>(S.size()); ++i) {
            const bool better = at_infinity ? dot(c, S[i]) < dot(c, S[best])
                                            : dist2(c, S[i]) > dist2(c, S[best]);
            if (better) best = i;
        }
        return best;
    }
    int best = -1;
    auto better = [&](int s) {
        if (best < 0) return true;
        const double ks = at_infinity ? -dot(c, S[s]) : dist2(c, S[s]);
        const double kb = at_infinity ? -dot(c, S[best]) : dist2(c, S[best]);
        return ks > kb || (ks == kb && s < best);
    };
    int node = root_;
    while (node >= 0) {
        const auto& tri = fvd.triangle(node);
        const Point v = fvd.vertex(node);
        const Point u = at_infinity ? c : c - v;
        int j = 0;
        double key = dot(u, S[tri[0]] - v);
        for (int k = 1; k < 3; ++k) {
            const double kk = dot(u, S[tri[k]] - v);
            if (kk < key || (kk == key && tri[k] < tri[j])) {
                key = kk;
                j = k;
            }
        }
        for (int k = 0; k < 3; ++k) {
            if (better(tri[k])) best = tri[k];
        }
        const Point a = S[tri[j]] - v;
        const int side = cross(a, Point{-u.x, -u.y}) > 0 ? j : (j + 2) % 3;
        node = child_[node][side];
    }
    return best;
}

int CentroidTree::farthest_site(const FvdTree& fvd, Point c) const { return descend(fvd, c, false); }

int CentroidTree::extreme_site(const FvdTree& fvd, Point dir) const { return descend(fvd, dir, true); }

// ---------------------------------------------------------------------------
// Queries

namespace {

// Largest t (sign = +1) or smallest t (sign = -1) with g(t) <= 0, where
// g(t) = max_s line_s(t) is convex. Newton steps on the active line approach
// the root from outside. Returns false when g > 0 everywhere.
bool boundary_root(const FvdTree& fvd, const CentroidTree& ct, const Bisector& bs, double sign,
                   double& out, std::optional<Point>& site) {
    const auto S = fvd.sites();
    int s = ct.extreme_site(fvd, bs.n * sign);
    Line l = bs.line(S[s]);
    double slope = sign * l.b;
    if (slope < 0 || (slope == 0 && l.a <= bs.tol(S[s], 0.0))) {
        out = sign * kInf;
        site.reset();
        return true;
    }
    if (slope == 0) return false;
    double tt = -l.a / slope;  // tt = sign * t
    const std::size_t cap = S.size() + 8;
    for (std::size_t it = 0; it < cap; ++it) {
        const double t = sign * tt;
        s = ct.farthest_site(fvd, bs.at(t));
        l = bs.line(S[s]);
        slope = sign * l.b;
        const double val = l.a + l.b * t;
        if (val <= bs.tol(S[s], t)) {
            out = t;
            site = S[s];
            return true;
        }
        if (slope <= 0) return false;
        const double next = -l.a / slope;
        if (!(next < tt)) break;
        tt = next;
    }
    // No progress in floating point; settle with an exact scan.
    bool ok = false;
    const BisectorInterval iv = scan_interval_or_empty(S, bs, ok);
    if (!ok) return false;
    out = sign > 0 ? iv.hi : iv.lo;
    site = sign > 0 ? iv.hi_site : iv.lo_site;
    return true;
}

}  // namespace

std::optional<BisectorInterval> bisector_interval(const FvdTree& fvd, const CentroidTree& ct,
                                                  Point x, Point y) {
    const Bisector bs(x, y);
    BisectorInterval iv{-kInf, kInf, std::nullopt, std::nullopt};
    if (fvd.sites().empty()) return iv;
    if (!boundary_root(fvd, ct, bs, 1.0, iv.hi, iv.hi_site)) return std::nullopt;
    if (!boundary_root(fvd, ct, bs, -1.0, iv.lo, iv.lo_site)) return std::nullopt;
    if (!settle(iv, bs.h2)) return std::nullopt;
    return iv;
}

std::optional<TwoBoundaryDisk> med_two_boundary(const FvdTree& fvd, const CentroidTree& ct,
                                                Point x, Point y) {
    const Bisector bs(x, y);
    const auto iv = bisector_interval(fvd, ct, x, y);
    if (!iv) return std::nullopt;
    return pick(bs, *iv, std::clamp(0.0, iv->lo, iv->hi));
}

// ---------------------------------------------------------------------------
// Block index

BlockIndex::BlockIndex(std::span<const Point> seq, std::size_t block_size)
    : seq_(seq.begin(), seq.end()), block_size_(std::max<std::size_t>(1, block_size)) {
    blocks_ = (seq_.size() + block_size_ - 1) / block_size_;
    if (blocks_ == 0) return;
    nodes_.resize(4 * blocks_);
    build(1, 0, blocks_);
}

void BlockIndex::build(std::size_t node, std::size_t lo, std::size_t hi) {
    const std::size_t first = lo * block_size_;
    const std::size_t last = std::min(hi * block_size_, seq_.size());
    nodes_[node].fvd = build_fvd(std::span<const Point>(seq_).subspan(first, last - first));
    nodes_[node].ct = build_centroid_tree(nodes_[node].fvd);
    if (hi - lo == 1) return;
    const std::size_t mid = (lo + hi) / 2;
    build(2 * node, lo, mid);
    build(2 * node + 1, mid, hi);
}

void BlockIndex::cover(std::size_t node, std::size_t lo, std::size_t hi, std::size_t count,
                       std::vector<std::size_t>& out) const {
    if (lo >= count) return;
    if (hi <= count) {
        out.push_back(node);
        return;
    }
    const std::size_t mid = (lo + hi) / 2;
    cover(2 * node, lo, mid, count, out);
    cover(2 * node + 1, mid, hi, count, out);
}

std::size_t BlockIndex::cover_size(std::size_t count) const {
    std::vector<std::size_t> nodes;
    if (blocks_ > 0) cover(1, 0, blocks_, std::min(count, blocks_), nodes);
    return nodes.size();
}

std::optional<BisectorInterval> BlockIndex::prefix_interval(std::size_t len, Point p, Point q) const {
    const Bisector bs(p, q);
    len = std::min(len, seq_.size());
    BisectorInterval iv{-kInf, kInf, std::nullopt, std::nullopt};
    const std::size_t full = len / block_size_;
    std::vector<std::size_t> nodes;
    if (full > 0) cover(1, 0, blocks_, full, nodes);
    for (std::size_t node : nodes) {
        const auto part = bisector_interval(nodes_[node].fvd, nodes_[node].ct, p, q);
        if (!part) return std::nullopt;
        if (part->lo > iv.lo) {
            iv.lo = part->lo;
            iv.lo_site = part->lo_site;
        }
        if (part->hi < iv.hi) {
            iv.hi = part->hi;
            iv.hi_site = part->hi_site;
        }
    }
    for (std::size_t i = full * block_size_; i < len; ++i) {
        if (!clip(iv, bs, seq_[i])) return std::nullopt;
    }
    if (!settle(iv, bs.h2)) return std::nullopt;
    return iv;
}

std::optional<TwoBoundaryDisk> prefix_med_two_boundary(const BlockIndex& index, std::size_t k,
                                                       Point p, Point q) {
    if (k < 1 || k > std::max<std::size_t>(1, index.block_count())) {
        throw std::out_of_range("block number out of range");
    }
    const Bisector bs(p, q);
    const auto iv = index.prefix_interval((k - 1) * index.block_size(), p, q);
    if (!iv) return std::nullopt;
    return pick(bs, *iv, std::clamp(0.0, iv->lo, iv->hi));
}

std::optional<TwoBoundaryDisk> largest_enclosing_two_boundary(const BlockIndex& index,
                                                              std::size_t len, Point p, Point q) {
    const Bisector bs(p, q);
    const auto iv = index.prefix_interval(len, p, q);
    if (!iv) return std::nullopt;
    if (std::isinf(iv->lo) || std::isinf(iv->hi)) {
        TwoBoundaryDisk out;
        out.t = std::isinf(iv->hi) ? kInf : -kInf;
        out.disk = Disk{bs.m, kInf};
        return out;
    }
    return pick(bs, *iv, std::abs(iv->lo) > std::abs(iv->hi) ? iv->lo : iv->hi);
}

}  // namespace twocenter
