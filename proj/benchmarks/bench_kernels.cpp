// Timing comparison of the OpenMP cell-sweep kernels against the serial
// reference, plus a whole-scenario timing. Usage: bench_kernels [--quick]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "netkin/kernels.hpp"
#include "netkin/run.hpp"

using namespace netkin;

namespace {

using clock_type = std::chrono::steady_clock;

double time_of(int reps, const std::function<void()>& fn) {
    fn(); // warm up
    const auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) fn();
    return std::chrono::duration<double>(clock_type::now() - t0).count() / reps;
}

std::vector<double> random_field(std::size_t n) {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(gen);
    return v;
}

void bench_size(std::size_t n, int reps) {
    const auto f1 = random_field(n);
    const auto f2 = random_field(n);
    std::vector<double> g1(n), g2(n);

    struct Row {
        const char* name;
        double serial, parallel;
    };
    std::vector<Row> rows;

    rows.push_back({"transport",
                    time_of(reps,
                            [&] {
                                reference::transport(f1.data(), f2.data(), g1.data(), g2.data(),
                                                     n, 0.1, -0.1, 0.45, 0.45);
                            }),
                    time_of(reps, [&] {
                        kernels::transport(f1.data(), f2.data(), g1.data(), g2.data(), n, 0.1,
                                           -0.1, 0.45, 0.45);
                    })});
    rows.push_back({"relax",
                    time_of(reps,
                            [&] {
                                reference::relax(f1.data(), f2.data(), g1.data(), g2.data(), n,
                                                 -2.0, 2.0, 0.9);
                            }),
                    time_of(reps, [&] {
                        kernels::relax(f1.data(), f2.data(), g1.data(), g2.data(), n, -2.0, 2.0,
                                       0.9);
                    })});
    rows.push_back({"godunov",
                    time_of(reps,
                            [&] {
                                reference::godunov_sweep(f1.data(), g1.data(), n, 0.1, -0.1,
                                                         0.2);
                            }),
                    time_of(reps, [&] {
                        kernels::godunov_sweep(f1.data(), g1.data(), n, 0.1, -0.1, 0.2);
                    })});

    std::printf("n = %zu (%d reps)\n", n, reps);
    for (const auto& r : rows) {
        std::printf("  %-10s serial %8.3f ns/cell   parallel %8.3f ns/cell   speedup %.2fx\n",
                    r.name, 1e9 * r.serial / n, 1e9 * r.parallel / n, r.serial / r.parallel);
    }
}

} // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d, parallel grain %zu cells\n",
                omp_get_max_threads(), kernels::parallel_grain);
#else
    std::printf("built without OpenMP\n");
#endif

    if (quick) {
        bench_size(1000, 50);
        bench_size(std::size_t{1} << 16, 20);
    } else {
        bench_size(1000, 2000);
        bench_size(std::size_t{1} << 16, 500);
        bench_size(std::size_t{1} << 22, 20);

        Scenario s = make_tripod(NodeKind::OneTwo, "bench", 1.0, 0.75, 0.5);
        const auto t0 = clock_type::now();
        RunReport r = run_scenario(s, Model::Both, {});
        std::printf("reference tripod scenario (both models): %.3f s, %zu + %zu steps\n",
                    std::chrono::duration<double>(clock_type::now() - t0).count(),
                    r.kinetic_steps, r.burgers_steps);
    }
    return 0;
}
