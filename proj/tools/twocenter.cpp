#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twocenter/circular_hull.hpp"
#include "twocenter/distant.hpp"
#include "twocenter/io.hpp"
#include "twocenter/nearby.hpp"
#include "twocenter/optimizer.hpp"
#include "twocenter/svg.hpp"

using namespace twocenter;

namespace {

struct Options {
    std::string input;
    double r = 0.0;
    double tol = 0.0;
    std::uint64_t seed = 1;
    int jobs = 1;
    int rotations = 24;
    std::string svg;
    std::string out;
    bool no_timing = false;
    std::string kind = "uniform";
    std::string bench_kind = "two-cluster";
    std::size_t n = 100;
    bool json = false;
    std::vector<std::size_t> sizes{1024, 2048, 4096, 8192};
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw ParseError("cannot write " + o.out);
    f << text << "\n";
}

void write_svg(const Options& o, const SvgScene& scene) {
    if (o.svg.empty()) return;
    std::ofstream f(o.svg);
    if (!f) throw ParseError("cannot write " + o.svg);
    f << render_svg(scene);
}

// Serializes, then reloads through the independent checker before output.
std::string checked_record(const std::vector<Point>& pts, const TwoDiskSolution& sol, const Options& o,
                           double secs) {
    ResultRecord rec{sol, o.no_timing ? std::nullopt : std::optional<double>(secs)};
    const std::string text = result_to_json(rec);
    load_result(text, pts);
    return text;
}

DecisionConfig decision_of(const Options& o) { return DecisionConfig{o.rotations, o.jobs}; }

int run_solve(const Options& o, bool tol_given) {
    const auto pts = read_instance(o.input).points;
    SolveConfig cfg;
    cfg.decision = decision_of(o);
    if (tol_given) cfg.tol = o.tol;
    const auto t0 = std::chrono::steady_clock::now();
    const auto sol = solve(pts, cfg);
    const double secs = seconds_since(t0);
    emit(o, checked_record(pts, sol, o, secs));
    write_svg(o, SvgScene{pts, std::nullopt, std::nullopt, sol});
    return 0;
}

int run_decide(const Options& o) {
    const auto pts = read_instance(o.input).points;
    const auto t0 = std::chrono::steady_clock::now();
    const auto sol = feasible(pts, o.r, decision_of(o));
    const double secs = seconds_since(t0);
    if (!sol) {
        std::cout << "infeasible\n";
        write_svg(o, SvgScene{pts, std::nullopt, std::nullopt, std::nullopt});
        return 1;
    }
    emit(o, checked_record(pts, *sol, o, secs));
    write_svg(o, SvgScene{pts, std::nullopt, std::nullopt, sol});
    return 0;
}

int run_oracle(const Options& o) {
    const auto pts = read_instance(o.input).points;
    const auto t0 = std::chrono::steady_clock::now();
    const auto sol = oracle_solve(pts);
    const double secs = seconds_since(t0);
    emit(o, checked_record(pts, sol, o, secs));
    write_svg(o, SvgScene{pts, std::nullopt, std::nullopt, sol});
    return 0;
}

int run_hull(const Options& o) {
    const auto pts = read_instance(o.input).points;
    const auto hull = hull_of(pts, o.r);
    emit(o, hull_to_json(hull, o.r));
    write_svg(o, SvgScene{pts, hull, std::nullopt, std::nullopt});
    return 0;
}

int run_coverage(const Options& o) {
    const auto pts = read_instance(o.input).points;
    const auto hull = hull_of(pts, o.r);
    if (!hull) {
        emit(o, hull_to_json(hull, o.r));
        return 0;
    }
    const Coverage cov = build_coverage(*hull);
    emit(o, coverage_to_json(cov));
    write_svg(o, SvgScene{pts, hull, cov, std::nullopt});
    return 0;
}

int run_gen(const Options& o) {
    Instance inst;
    inst.points = generate(parse_kind(o.kind), o.n, o.seed);
    inst.name = o.kind;
    inst.seed = o.seed;
    emit(o, o.json ? instance_to_json(inst) : instance_to_text(inst));
    return 0;
}

int run_bench(const Options& o, bool r_given) {
    const double r = r_given ? o.r : 1.05;
    for (std::size_t n : o.sizes) {
        const auto pts = generate(parse_kind(o.bench_kind), n, o.seed);
        double secs[2] = {0, 0};
        bool ok[2] = {false, false};
        const int jobs[2] = {1, o.jobs};
        for (int k = 0; k < 2; ++k) {
            const auto t0 = std::chrono::steady_clock::now();
            ok[k] = feasible(pts, r, DecisionConfig{o.rotations, jobs[k]}).has_value();
            secs[k] = seconds_since(t0);
        }
        std::cout << "{\"n\": " << n << ", \"r\": " << format_double(r) << ", \"feasible\": "
                  << (ok[0] ? "true" : "false") << ", \"serial_seconds\": " << format_double(secs[0])
                  << ", \"jobs\": " << o.jobs << ", \"parallel_seconds\": " << format_double(secs[1]) << "}\n";
        if (ok[0] != ok[1]) throw std::runtime_error("serial and parallel decisions differ");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar two-center solver"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input) sub->add_option("input", o.input, "Instance file (text or JSON)")->required();
        sub->add_option("--jobs", o.jobs, "Worker threads for decision branches")->check(CLI::PositiveNumber);
        sub->add_option("--rotations", o.rotations, "Rotation frames for the distant case")
            ->check(CLI::PositiveNumber);
        sub->add_option("--svg", o.svg, "Write an SVG figure");
        sub->add_option("--out", o.out, "Write output here instead of stdout");
        sub->add_flag("--no-timing", o.no_timing, "Omit timings from records");
        sub->add_option("--seed", o.seed, "Random seed");
    };

    auto* solve_cmd = app.add_subcommand("solve", "Optimal radius and two disks");
    common(solve_cmd, true);
    auto* tol_opt = solve_cmd->add_option("--tol", o.tol, "Bisection tolerance relative to the MEB radius")
                        ->check(CLI::PositiveNumber);

    auto* decide_cmd = app.add_subcommand("decide", "Two disks of radius r, or infeasible");
    common(decide_cmd, true);
    decide_cmd->add_option("--r", o.r, "Radius")->required()->check(CLI::NonNegativeNumber);

    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive 2-partition solver (n <= 16)");
    common(oracle_cmd, true);

    auto* hull_cmd = app.add_subcommand("hull", "r-circular hull");
    common(hull_cmd, true);
    hull_cmd->add_option("--r", o.r, "Radius")->required()->check(CLI::PositiveNumber);

    auto* cov_cmd = app.add_subcommand("coverage", "r-coverage boundary");
    common(cov_cmd, true);
    cov_cmd->add_option("--r", o.r, "Radius")->required()->check(CLI::PositiveNumber);

    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
    common(gen_cmd, false);
    gen_cmd->add_option("--kind", o.kind, "uniform, two-cluster or circle")
        ->check(CLI::IsMember({"uniform", "two-cluster", "circle"}));
    gen_cmd->add_option("--n", o.n, "Point count")->required();
    gen_cmd->add_flag("--json", o.json, "Emit JSON instead of text");

    auto* bench_cmd = app.add_subcommand("bench", "Serial vs parallel decision timings");
    common(bench_cmd, false);
    bench_cmd->add_option("--sizes", o.sizes, "Point counts")->delimiter(',');
    bench_cmd->add_option("--kind", o.bench_kind, "Instance kind")
        ->check(CLI::IsMember({"uniform", "two-cluster", "circle"}));
    auto* bench_r = bench_cmd->add_option("--r", o.r, "Radius (default 1.05)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(o, tol_opt->count() > 0);
        if (decide_cmd->parsed()) return run_decide(o);
        if (oracle_cmd->parsed()) return run_oracle(o);
        if (hull_cmd->parsed()) return run_hull(o);
        if (cov_cmd->parsed()) return run_coverage(o);
        if (gen_cmd->parsed()) return run_gen(o);
        if (bench_cmd->parsed()) return run_bench(o, bench_r->count() > 0);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
