#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "twocenter/fvd.hpp"

using namespace twocenter;

namespace {

struct Built {
    FvdTree fvd;
    CentroidTree ct;
};

Built make(const std::vector<Point>& Q) {
    Built b{build_fvd(Q), {}};
    b.ct = build_centroid_tree(b.fvd);
    return b;
}

}  // namespace

TEST_CASE("two sites split the plane at the bisector") {
    const auto b = make({{0, 0}, {2, 0}});
    CHECK(b.fvd.vertex_count() == 0);
    CHECK(b.fvd.sites()[b.ct.farthest_site(b.fvd, {1.5, 3})] == Point{0, 0});
    CHECK(b.fvd.sites()[b.ct.farthest_site(b.fvd, {0.5, -3})] == Point{2, 0});
}

TEST_CASE("equilateral triangle has one vertex at the centroid") {
    const double s = std::sqrt(3.0);
    const auto b = make({{0, 0}, {2, 0}, {1, s}});
    REQUIRE(b.fvd.vertex_count() == 1);
    CHECK(b.fvd.vertex(0).x == doctest::Approx(1.0));
    CHECK(b.fvd.vertex(0).y == doctest::Approx(s / 3));
}

TEST_CASE("farthest site by descent equals a linear scan") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 3.0);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 300;
        auto Q = t % 2 ? oracle::uniform_points(rng, n) : oracle::clustered_points(rng, n);
        const auto b = make(Q);
        for (int k = 0; k < 200; ++k) {
            const Point c{u(rng), u(rng)};
            const int got = b.ct.farthest_site(b.fvd, c);
            const int ref = b.fvd.farthest_site_scan(c);
            CHECK(dist(c, b.fvd.sites()[got]) == doctest::Approx(dist(c, b.fvd.sites()[ref])));
        }
    }
}

TEST_CASE("skeleton is a tree and the decomposition is shallow") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 50; ++t) {
        std::vector<Point> Q;
        const std::size_t n = 3 + rng() % 400;
        std::uniform_real_distribution<double> a(0, 2 * std::numbers::pi);
        for (std::size_t i = 0; i < n; ++i) {
            const double th = a(rng);
            Q.push_back({std::cos(th), std::sin(th)});
        }
        const auto b = make(Q);
        const std::size_t N = b.fvd.vertex_count();
        CHECK(N + 2 == b.fvd.sites().size());
        std::size_t edges = 0;
        for (std::size_t i = 0; i < N; ++i) {
            for (int k = 0; k < 3; ++k) {
                const int j = b.fvd.neighbor(i, k);
                if (j < 0) continue;
                ++edges;
                bool back = false;
                for (int kk = 0; kk < 3; ++kk) back = back || b.fvd.neighbor(j, kk) == static_cast<int>(i);
                CHECK(back);
            }
        }
        CHECK(edges == 2 * (N - 1));
        const int bound = static_cast<int>(std::ceil(std::log2(static_cast<double>(N)))) + 1;
        CHECK(b.ct.height() <= bound);
    }
}

TEST_CASE("med_two_boundary fixtures") {
    const auto b = make({{0, 0}, {2, 0}});
    const auto d = med_two_boundary(b.fvd, b.ct, {1, 2}, {1, -2});
    REQUIRE(d);
    CHECK(d->disk.center.x == doctest::Approx(1.0));
    CHECK(d->disk.center.y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d->disk.radius == doctest::Approx(2.0));

    const auto inner = make({{0.1, 0.2}, {-0.3, 0.1}});
    const auto dd = med_two_boundary(inner.fvd, inner.ct, {-1, 0}, {1, 0});
    REQUIRE(dd);
    CHECK(dd->disk.radius == doctest::Approx(1.0));
    CHECK_FALSE(dd->support.has_value());

    CHECK_THROWS_AS(med_two_boundary(b.fvd, b.ct, {1, 1}, {1, 1}), DegenerateError);

    // Points beyond both sides of a short chord force contradictory centers.
    const auto split = make({{5, 0}, {-5, 0}});
    CHECK_FALSE(med_two_boundary(split.fvd, split.ct, {0, 1}, {0, -1}).has_value());
}

TEST_CASE("med_two_boundary equals support enumeration") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> u(-1.0, 2.0);
    int compared = 0;
    for (int t = 0; t < 1000; ++t) {
        auto Q = oracle::uniform_points(rng, 1 + rng() % 40);
        const Point x{u(rng), u(rng)}, y{u(rng), u(rng)};
        const auto b = make(Q);
        const auto got = med_two_boundary(b.fvd, b.ct, x, y);
        const Disk ref = oracle::two_boundary_brute(Q, x, y);
        if (ref.radius < 0) {
            CHECK_FALSE(got.has_value());
            continue;
        }
        REQUIRE(got);
        ++compared;
        CHECK(oracle::rel_close(got->disk.radius, ref.radius, 1e-9));
        CHECK(std::abs(dist(got->disk.center, x) - got->disk.radius) <= 1e-9 * got->disk.radius);
        CHECK(oracle::covers(got->disk.center, got->disk.radius, Q, 1e-9));
    }
    CHECK(compared > 300);
}

TEST_CASE("objective along the bisector decreases then increases") {
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> u(-1.0, 2.0);
    for (int t = 0; t < 100; ++t) {
        auto Q = oracle::uniform_points(rng, 2 + rng() % 30);
        const Point x{u(rng), u(rng)}, y{u(rng), u(rng)};
        const Point m = midpoint(x, y);
        const Point n = perp(y - x) * (1.0 / dist(x, y));
        bool rising = false;
        double prev = std::numeric_limits<double>::infinity();
        bool unimodal = true;
        for (int k = -2000; k <= 2000; ++k) {
            const Point c = m + n * (k * 0.005);
            double f = dist(c, x);
            for (const Point& q : Q) f = std::max(f, dist(c, q));
            if (f > prev + 1e-12) rising = true;
            else if (rising && f < prev - 1e-12) unimodal = false;
            prev = f;
        }
        CHECK(unimodal);
    }
}

TEST_CASE("prefix queries over blocks") {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> u(-1.0, 2.0);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 300;
        auto Q = oracle::uniform_points(rng, n);
        const BlockIndex index(Q, 1 + rng() % 20);
        const Point p{u(rng), u(rng)}, q{u(rng), u(rng)};
        for (std::size_t k = 1; k <= index.block_count(); ++k) {
            const std::size_t len = (k - 1) * index.block_size();
            std::vector<Point> prefix(Q.begin(), Q.begin() + len);
            const auto got = prefix_med_two_boundary(index, k, p, q);
            const Disk ref = oracle::two_boundary_brute(prefix, p, q);
            REQUIRE(got.has_value() == (ref.radius >= 0));
            if (got) CHECK(oracle::rel_close(got->disk.radius, ref.radius, 1e-9));
            CHECK(index.cover_size(k - 1) <= 2 * std::ceil(std::log2(index.block_count() + 1.0)) + 1);
        }
        const auto first = prefix_med_two_boundary(index, 1, p, q);
        REQUIRE(first);
        CHECK(first->disk.radius == doctest::Approx(dist(p, q) / 2));
    }
}

TEST_CASE("largest enclosing disk through two points") {
    const std::vector<Point> fixture{{0, 2}, {0, -0.4}};
    const BlockIndex index(fixture, 64);
    const auto d = largest_enclosing_two_boundary(index, 2, {-1, 0}, {1, 0});
    REQUIRE(d);
    CHECK(d->t == doctest::Approx(1.05));
    CHECK(d->disk.radius == doctest::Approx(std::sqrt(1 + 1.05 * 1.05)));

    const auto empty = largest_enclosing_two_boundary(index, 0, {-1, 0}, {1, 0});
    REQUIRE(empty);
    CHECK(std::isinf(empty->disk.radius));

    const std::vector<Point> mid{{0, 0}};
    const BlockIndex mindex(mid, 64);
    const auto m = largest_enclosing_two_boundary(mindex, 1, {-1, 0}, {1, 0});
    REQUIRE(m);
    CHECK(std::isinf(m->disk.radius));

    std::mt19937_64 rng(36);
    std::uniform_real_distribution<double> u(-1.0, 2.0);
    for (int t = 0; t < 300; ++t) {
        auto Q = oracle::uniform_points(rng, 1 + rng() % 30);
        const BlockIndex bi(Q, 1 + rng() % 8);
        const Point p{u(rng), u(rng)}, q{u(rng), u(rng)};
        const std::size_t len = rng() % (Q.size() + 1);
        std::vector<Point> prefix(Q.begin(), Q.begin() + len);
        const auto got = largest_enclosing_two_boundary(bi, len, p, q);
        const double ref = oracle::largest_two_boundary_brute(prefix, p, q);
        REQUIRE(got.has_value() == (ref >= 0));
        if (!got) continue;
        if (std::isinf(ref)) {
            CHECK(std::isinf(got->disk.radius));
        } else {
            CHECK(oracle::rel_close(got->disk.radius, ref, 1e-9));
        }
    }
}
