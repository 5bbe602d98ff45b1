// Serial reference vs OpenMP decision kernels on two-cluster and uniform instances.
// Usage: bench_parallel [jobs] [max_n]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>

#include "twocenter/distant.hpp"
#include "twocenter/io.hpp"
#include "twocenter/nearby.hpp"
#include "twocenter/optimizer.hpp"

using namespace twocenter;

namespace {

double time_it(const std::function<bool()>& f, bool& result) {
    const auto t0 = std::chrono::steady_clock::now();
    result = f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int jobs = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
    const std::size_t max_n = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 4096;
    std::printf("threads available: %d, jobs: %d\n", omp_get_max_threads(), jobs);
    std::printf("%-12s %-8s %-12s %-6s %10s %10s %8s\n", "kind", "n", "kernel", "r", "serial_s", "omp_s",
                "speedup");

    for (const InstanceKind kind : {InstanceKind::TwoCluster, InstanceKind::Uniform}) {
        const char* kname = kind == InstanceKind::TwoCluster ? "two-cluster" : "uniform";
        for (std::size_t n = 256; n <= max_n; n *= 4) {
            const auto pts = generate(kind, n, 11);
            const double rstar = solve_bisect(pts, 1e-4).radius;
            for (double f : {0.98, 1.02}) {
                const double r = rstar * f;
                struct Kernel {
                    const char* name;
                    std::function<bool(int)> run;
                };
                const Kernel kernels[] = {
                    {"nearby_all", [&](int j) { return decide_nearby_all(pts, r, {24, j}).has_value(); }},
                    {"distant", [&](int j) { return decide_distant(pts, r, {24, j}).has_value(); }},
                };
                for (const Kernel& k : kernels) {
                    bool a = false, b = false;
                    const double ts = time_it([&] { return k.run(1); }, a);
                    const double tp = time_it([&] { return k.run(jobs); }, b);
                    std::printf("%-12s %-8zu %-12s %-6.2f %10.4f %10.4f %8.2f%s\n", kname, n, k.name, f, ts, tp, ts / tp,
                                a == b ? "" : "  MISMATCH");
                    if (a != b) return 1;
                }
            }
        }
    }
    return 0;
}
