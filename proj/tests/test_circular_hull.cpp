#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "twocenter/circular_hull.hpp"

using namespace twocenter;

namespace {

std::vector<Point> sorted_around(std::vector<Point> pts, Point anchor) {
    std::sort(pts.begin(), pts.end(), [&](Point a, Point b) {
        return polar_angle(anchor, a) < polar_angle(anchor, b);
    });
    return pts;
}

std::vector<Point> cycle_of(const CircularHull& h) { return {h.vertices().begin(), h.vertices().end()}; }

}  // namespace

TEST_CASE("hull of a square") {
    std::vector<Point> sq{{0, 0}, {0, 1}, {0.5, 0.5}, {1, 0}, {1, 1}};
    auto h = build_hull(sq, 1.0);
    REQUIRE(h);
    CHECK(h->size() == 4);
    CHECK(h->vertices()[0] == Point{0, 0});
    CHECK(h->vertices()[1] == Point{1, 0});
    CHECK(h->contains({0.5, 0.5}));
    CHECK_FALSE(h->contains({2, 2}));
    CHECK_FALSE(build_hull(sq, 0.7).has_value());
}

TEST_CASE("build_hull rejects unsorted input") {
    std::vector<Point> pts{{1, 0}, {0, 0}};
    CHECK_THROWS_AS(build_hull(pts, 5.0), UnsortedInputError);
}

TEST_CASE("single point and empty set") {
    std::vector<Point> one{{2, 3}};
    auto h = build_hull(one, 1.0);
    REQUIRE(h);
    CHECK(h->size() == 1);
    CHECK(h->degenerate());
    auto e = build_hull({}, 1.0);
    REQUIRE(e);
    CHECK(e->empty());
    CHECK(e->contains({100, 100}));
}

TEST_CASE("hull vertices match brute-force vertex test") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> f(1.0, 3.0);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 1 + rng() % 40;
        auto pts = oracle::uniform_points(rng, n);
        const double base = oracle::meb_brute(pts).radius;
        const double r = std::max(base, 1e-3) * f(rng);
        auto h = hull_of(pts, r);
        REQUIRE(h);
        CHECK(cycle_of(*h) == oracle::alpha_vertices(pts, r));
        for (const Point& p : pts) CHECK(h->contains(p));
    }
}

TEST_CASE("existence iff meb fits") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> f(0.8, 1.2);
    for (int t = 0; t < 300; ++t) {
        auto pts = oracle::uniform_points(rng, 2 + rng() % 20);
        const double r = oracle::meb_brute(pts).radius * f(rng);
        const bool fits = oracle::meb_brute(pts).radius <= r * (1 + 1e-9);
        CHECK(hull_of(pts, r).has_value() == fits);
    }
}

TEST_CASE("merge of separated hulls equals a fresh build") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> f(1.0, 2.0);
    for (int t = 0; t < 300; ++t) {
        auto pts = oracle::uniform_points(rng, 2 + rng() % 30);
        std::sort(pts.begin(), pts.end());
        const std::size_t cut = 1 + rng() % (pts.size() - 1);
        const double r = oracle::meb_brute(pts).radius * f(rng);
        std::vector<Point> left(pts.begin(), pts.begin() + cut);
        std::vector<Point> right(pts.begin() + cut, pts.end());
        auto a = build_hull(left, r);
        auto b = build_hull(right, r);
        REQUIRE(a);
        REQUIRE(b);
        auto merged = merge_separated(*a, *b);
        REQUIRE(merged);
        CHECK(*merged == *build_hull(pts, r));
        const auto tr = tangents(*a, *b);
        if (std::holds_alternative<Bridges>(tr)) {
            const auto br = std::get<Bridges>(tr);
            CHECK(a->contains(br.first_to_second.from));
            CHECK(b->contains(br.first_to_second.to));
        }
    }
}

TEST_CASE("merge reports missing common disk") {
    std::vector<Point> a{{0, 0}};
    std::vector<Point> b{{5, 0}};
    auto ha = build_hull(a, 1.0);
    auto hb = build_hull(b, 1.0);
    CHECK_FALSE(merge_separated(*ha, *hb).has_value());
    CHECK(std::get<Containment>(tangents(*ha, *hb)) == Containment::NoCommonDisk);
    auto hc = build_hull(a, 2.0);
    CHECK_THROWS_AS(merge_separated(*ha, *hc), RadiusMismatchError);
}

TEST_CASE("ordered insertion reproduces fresh builds") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> f(0.6, 2.5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 60;
        auto pts = t % 3 ? oracle::uniform_points(rng, n) : oracle::clustered_points(rng, n);
        const Point anchor = t % 2 ? Point{0.5, 0.5} : Point{-1.0, 0.4};
        pts = sorted_around(pts, anchor);
        const double r = oracle::meb_brute(pts).radius * f(rng);
        HullBuilder hb(r, anchor);
        for (std::size_t i = 0; i < n; ++i) {
            hb.insert(pts[i]);
            std::vector<Point> prefix(pts.begin(), pts.begin() + i + 1);
            auto fresh = hull_of(prefix, r);
            CHECK(hb.alive() == fresh.has_value());
            if (!fresh) break;
            CHECK(hb.hull() == *fresh);
            CHECK(hb.pops() <= hb.insertions());
        }
    }
}

TEST_CASE("old versions survive later insertions") {
    std::mt19937_64 rng(12);
    auto pts = sorted_around(oracle::uniform_points(rng, 50), {0.5, 0.5});
    HullBuilder hb(2.0, {0.5, 0.5});
    std::vector<HullBuilder::Storage::Version> versions;
    std::vector<std::vector<Point>> snapshots;
    for (const Point& p : pts) {
        hb.insert(p);
        versions.push_back(hb.version());
        snapshots.push_back(hb.storage().to_vector(hb.version()));
    }
    for (std::size_t i = 0; i < versions.size(); ++i) {
        CHECK(hb.storage().to_vector(versions[i]) == snapshots[i]);
    }
}

TEST_CASE("insertion order is enforced") {
    HullBuilder hb(5.0, {0, 0});
    hb.insert({1, 0});
    hb.insert({0, 1});
    CHECK_THROWS_AS(hb.insert({1, 0.01}), OrderViolationError);
    HullBuilder cw(5.0, {0, 0}, Winding::Cw);
    cw.insert({0, 1});
    CHECK_NOTHROW(cw.insert({1, 0}));
}

TEST_CASE("coverage boundary alternates r and 2r arcs") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> f(1.0, 2.0);
    for (int t = 0; t < 200; ++t) {
        auto pts = oracle::uniform_points(rng, 2 + rng() % 25);
        const double r = oracle::meb_brute(pts).radius * f(rng);
        auto h = hull_of(pts, r);
        REQUIRE(h);
        const Coverage cov = build_coverage(*h);
        REQUIRE(cov.arcs.size() == 2 * h->size());
        for (std::size_t i = 0; i < cov.arcs.size(); ++i) {
            CHECK(cov.arcs[i].radius == doctest::Approx(i % 2 ? r : 2 * r));
            const Point end = cov.arcs[i].end();
            const Point next = cov.arcs[(i + 1) % cov.arcs.size()].start();
            CHECK(dist(end, next) <= 1e-7 * r);
        }
    }
}

TEST_CASE("coverage membership equals meb test") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> f(1.0, 2.0);
    std::uniform_real_distribution<double> u(-3.0, 4.0);
    for (int t = 0; t < 50; ++t) {
        auto pts = oracle::uniform_points(rng, 2 + rng() % 15);
        const double r = oracle::meb_brute(pts).radius * f(rng);
        auto h = hull_of(pts, r);
        REQUIRE(h);
        const Coverage cov = build_coverage(*h);
        for (int k = 0; k < 200; ++k) {
            const Point z{u(rng), u(rng)};
            auto with = pts;
            with.push_back(z);
            const double m = oracle::meb_brute(with).radius;
            if (std::abs(m - r) <= 1e-7 * r) continue;  // too close to call
            const bool expect = m <= r;
            CHECK(coverage_contains(pts, z, r) == expect);
            CHECK(coverage_contains(*h, z) == expect);
            CHECK(cov.contains(z) == expect);
        }
    }
    std::vector<Point> far{{0, 0}, {10, 0}};
    CHECK_THROWS_AS(coverage_contains(far, {1, 1}, 1.0), NoCoverageError);
}
