#include <doctest.h>

#include <chrono>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "twocenter/optimizer.hpp"

using namespace twocenter;

TEST_CASE("candidate radii fixtures") {
    CHECK(candidate_radii(std::vector<Point>{{0, 0}, {4, 0}}) == std::vector<double>{0, 2});
    const double s = std::sqrt(3.0) / 2;
    const auto c = candidate_radii(std::vector<Point>{{0, 0}, {1, 0}, {0.5, s}});
    REQUIRE(c.size() >= 3);
    CHECK(c.front() == 0);
    CHECK(c[1] == doctest::Approx(0.5));
    CHECK(c.back() == doctest::Approx(1 / std::sqrt(3.0)));
}

TEST_CASE("optimum is a candidate") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 100; ++t) {
        auto S = oracle::uniform_points(rng, 3 + rng() % 10);
        const double r = oracle::partition_radius(S);
        const auto c = candidate_radii(S);
        const auto it = std::lower_bound(c.begin(), c.end(), r * (1 - 1e-9));
        REQUIRE(it != c.end());
        CHECK(oracle::rel_close(*it, r, 1e-9));
    }
}

TEST_CASE("solve fixtures") {
    const std::vector<Point> two{{0, 0}, {4, 0}};
    const auto a = solve(two);
    CHECK(a.radius == 0);
    CHECK(verify(two, a, 0));

    const std::vector<Point> square{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    const auto b = solve(square);
    CHECK(b.radius == doctest::Approx(1.0));
    CHECK(verify(square, b, 1.0));

    const std::vector<Point> dup{{0, 0}, {0, 0}, {3, 0}, {3, 0}, {3, 0}};
    const auto d = solve(dup);
    CHECK(d.radius == 0);
    CHECK(d.assignment.size() == dup.size());
    CHECK(d.assignment[0] == d.assignment[1]);
    CHECK(d.assignment[2] != d.assignment[0]);
}

TEST_CASE("oracle fixtures") {
    CHECK(oracle_solve(std::vector<Point>{{0, 0}, {4, 0}}).radius == 0);
    CHECK(oracle_solve(std::vector<Point>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}).radius == doctest::Approx(1.0));
    const double s = std::sqrt(3.0) / 2;
    CHECK(oracle_solve(std::vector<Point>{{0, 0}, {1, 0}, {0.5, s}}).radius == doctest::Approx(0.5));
    CHECK_THROWS_AS(oracle_solve(std::vector<Point>(17, Point{0, 0})), TooLargeError);
}

TEST_CASE("solve matches the partition oracle") {
    std::mt19937_64 rng(62);
    for (int t = 0; t < 120; ++t) {
        const std::size_t n = 4 + rng() % 9;
        auto S = t % 2 ? oracle::uniform_points(rng, n) : oracle::clustered_points(rng, n);
        SolveStats st;
        const auto sol = solve(S, {}, &st);
        CHECK_FALSE(st.monotonicity_violation);
        CHECK(oracle::rel_close(sol.radius, oracle::partition_radius(S), 1e-9));
        CHECK(verify(S, sol, sol.radius));
        CHECK(oracle::rel_close(sol.radius, oracle_solve(S).radius, 1e-12));
    }
}

TEST_CASE("bisection agrees with exact mode") {
    std::mt19937_64 rng(63);
    for (int t = 0; t < 20; ++t) {
        auto S = oracle::clustered_points(rng, 20 + rng() % 60);
        const auto exact = solve(S);
        SolveStats st;
        const auto approx = solve_bisect(S, 1e-6, {}, &st);
        CHECK(approx.radius >= exact.radius * (1 - 1e-9));
        CHECK(approx.radius <= exact.radius + 1e-6 * meb(S).radius * 1.01);
        CHECK_FALSE(st.monotonicity_violation);
    }
}

TEST_CASE("invariance under motions and scaling") {
    std::mt19937_64 rng(64);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int t = 0; t < 20; ++t) {
        auto S = oracle::clustered_points(rng, 4 + rng() % 9);
        const double r = solve(S).radius;
        const double th = u(rng);
        const Point shift{u(rng), u(rng)};
        const double scale = std::exp(u(rng) / 2);
        std::vector<Point> moved, scaled;
        for (const Point& p : S) {
            moved.push_back(rotate(p, th) + shift);
            scaled.push_back(p * scale);
        }
        CHECK(oracle::rel_close(solve(moved).radius, r, 1e-9));
        CHECK(oracle::rel_close(solve(scaled).radius, r * scale, 1e-9));
    }
}
