#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "twocenter/io.hpp"

using namespace twocenter;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string out_file = "cli_test_out.txt";
    const std::string cmd = std::string(TWOCENTER_CLI) + " " + args + " > " + out_file + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

const std::string square = std::string(TWOCENTER_DATA) + "/square.txt";

}  // namespace

TEST_CASE("decide on the square") {
    const auto yes = run("decide " + square + " --r 1 --no-timing");
    CHECK(yes.code == 0);
    const std::vector<Point> S{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    const auto rec = load_result(yes.out, S);
    CHECK(rec.solution.disk1.radius <= 1.0 + 1e-9);
    CHECK(rec.solution.disk2.radius <= 1.0 + 1e-9);

    const auto no = run("decide " + square + " --r 0.99");
    CHECK(no.code == 1);
    CHECK(no.out.find("infeasible") != std::string::npos);
}

TEST_CASE("parse errors exit with 2") {
    CHECK(run("decide " + square).code == 2);
    CHECK(run("frobnicate").code == 2);
    std::ofstream("cli_bad.txt") << "1 2\nnot a point\n";
    CHECK(run("solve cli_bad.txt").code == 2);
    CHECK(run("solve missing_file.txt").code == 2);
}

TEST_CASE("solve agrees with oracle") {
    for (int seed = 0; seed < 100; ++seed) {
        const std::size_t n = 4 + seed % 9;
        const std::string kind = seed % 2 ? "uniform" : "two-cluster";
        const auto gen = run("gen --kind " + kind + " --n " + std::to_string(n) + " --seed " + std::to_string(seed));
        REQUIRE(gen.code == 0);
        std::ofstream("cli_inst.txt") << gen.out;
        const auto pts = parse_instance(gen.out).points;
        const auto a = run("solve cli_inst.txt --no-timing");
        const auto b = run("oracle cli_inst.txt --no-timing");
        REQUIRE(a.code == 0);
        REQUIRE(b.code == 0);
        const double ra = load_result(a.out, pts).solution.radius;
        const double rb = load_result(b.out, pts).solution.radius;
        CHECK(oracle::rel_close(ra, rb, 1e-9));
    }
}

TEST_CASE("structured output is deterministic") {
    std::ofstream("cli_det.txt") << run("gen --kind uniform --n 40 --seed 5").out;
    const auto a = run("solve cli_det.txt --no-timing");
    const auto b = run("solve cli_det.txt --no-timing --jobs 3");
    CHECK(a.code == 0);
    CHECK(a.out == run("solve cli_det.txt --no-timing").out);
    CHECK(a.out == b.out);
}
