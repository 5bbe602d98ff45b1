#ifndef TWOCENTER_FVD_HPP
#define TWOCENTER_FVD_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twocenter/geometry.hpp"

namespace twocenter {

/*
 * Farthest-point Voronoi diagram of a planar point set, stored through its
 * dual: the farthest-point Delaunay triangulation of the convex-position
 * sites. Each triangle is one diagram vertex (its circumcenter); triangles
 * sharing a diagonal are joined by a diagram edge, so the skeleton is a tree.
 */
class FvdTree {
public:
    FvdTree() = default;

    /// Sites in ccw order (strictly convex hull vertices of the input).
    std::span<const Point> sites() const { return sites_; }
    std::size_t vertex_count() const { return tris_.size(); }

    /// Site indices of triangle i, ccw.
    const std::array<int, 3>& triangle(std::size_t i) const { return tris_[i]; }
    /// Diagram vertex i (the triangle's circumcenter).
    Point vertex(std::size_t i) const { return centers_[i]; }
    /// Neighbouring triangle across side (k, k+1) of triangle i, or -1.
    int neighbor(std::size_t i, int k) const { return adj_[i][k]; }

    /// Linear scan over the sites; used for validation.
    int farthest_site_scan(Point c) const;

    friend FvdTree build_fvd(std::span<const Point> Q);

private:
    std::vector<Point> sites_;
    std::vector<std::array<int, 3>> tris_;
    std::vector<std::array<int, 3>> adj_;
    std::vector<Point> centers_;
};

FvdTree build_fvd(std::span<const Point> Q);

/*
 * Centroid decomposition of the diagram skeleton. child[i][k] is the centroid
 * of the component reached from node i across its side k, or -1 when that
 * side is a hull edge or leads out of i's component.
 */
class CentroidTree {
public:
    int root() const { return root_; }
    int child(std::size_t node, int side) const { return child_[node][side]; }
    int depth(std::size_t node) const { return depth_[node]; }
    /// Number of levels; 0 for an empty skeleton.
    int height() const { return height_; }

    /// Farthest site from c by descending the decomposition.
    int farthest_site(const FvdTree& fvd, Point c) const;
    /// Farthest site from m + T*dir as T grows without bound.
    int extreme_site(const FvdTree& fvd, Point dir) const;

    friend CentroidTree build_centroid_tree(const FvdTree& fvd);

private:
    int descend(const FvdTree& fvd, Point c, bool at_infinity) const;

    int root_ = -1;
    int height_ = 0;
    std::vector<std::array<int, 3>> child_;
    std::vector<int> depth_;
};

CentroidTree build_centroid_tree(const FvdTree& fvd);

/// Disk centers on the bisector of x, y are m + t*n with m the midpoint and
/// n the unit left normal of x->y; the feasible set for enclosing Q is [lo, hi].
struct BisectorInterval {
    double lo;
    double hi;
    std::optional<Point> lo_site;  // site on the boundary at t = lo
    std::optional<Point> hi_site;
};

struct TwoBoundaryDisk {
    Disk disk;
    double t = 0.0;
    std::optional<Point> support;  // point of Q on the boundary, if any
};

/// Feasible bisector range for Q's sites; nullopt when no disk through x and
/// y contains Q. Throws DegenerateError when x == y.
std::optional<BisectorInterval> bisector_interval(const FvdTree& fvd, const CentroidTree& ct,
                                                  Point x, Point y);

/// Smallest disk with x and y on its boundary that contains Q.
std::optional<TwoBoundaryDisk> med_two_boundary(const FvdTree& fvd, const CentroidTree& ct,
                                                Point x, Point y);

/// Complete binary tree over consecutive blocks of a sequence; every node
/// owns the diagram and decomposition of its blocks' union.
class BlockIndex {
public:
    BlockIndex(std::span<const Point> seq, std::size_t block_size = 64);

    std::size_t block_size() const { return block_size_; }
    std::size_t block_count() const { return blocks_; }
    std::size_t size() const { return seq_.size(); }
    /// Number of stored nodes whose union is the first `count` blocks.
    std::size_t cover_size(std::size_t count) const;

    /// Intersection of the per-point feasible ranges over seq[0, len).
    std::optional<BisectorInterval> prefix_interval(std::size_t len, Point p, Point q) const;

private:
    struct Node {
        FvdTree fvd;
        CentroidTree ct;
    };
    void cover(std::size_t node, std::size_t lo, std::size_t hi, std::size_t count,
               std::vector<std::size_t>& out) const;
    void build(std::size_t node, std::size_t lo, std::size_t hi);

    std::vector<Point> seq_;
    std::size_t block_size_;
    std::size_t blocks_;
    std::vector<Node> nodes_;
};

/// Smallest disk with p, q on the boundary containing the first k-1 blocks
/// (k is 1-based, so k = 1 means the empty prefix and yields the diameter disk).
std::optional<TwoBoundaryDisk> prefix_med_two_boundary(const BlockIndex& index, std::size_t k,
                                                       Point p, Point q);

/// Largest disk with p, q on its boundary containing the first len points.
/// The radius is +infinity when the feasible range is unbounded; nullopt when
/// no such disk exists.
std::optional<TwoBoundaryDisk> largest_enclosing_two_boundary(const BlockIndex& index,
                                                              std::size_t len, Point p, Point q);

}  // namespace twocenter

#endif  // TWOCENTER_FVD_HPP
