#include <chrono>
#include <cstdio>
#include <vector>

#include "dunklosc/spectra_algebraic.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Timing comparison of the serial sector sweep against the OpenMP one, over a
// small parameter grid. The parallel path must produce identical output; the
// test suite asserts that, this tool only reports speed.

namespace {

using Clock = std::chrono::steady_clock;

double run(bool parallel, const std::vector<dunkl::ModelParams>& grid, int p_max,
           std::size_t& total_levels) {
    const auto t0 = Clock::now();
    total_levels = 0;
    for (const auto& p : grid) {
        const auto res = parallel ? dunkl::enumerate_levels_parallel(p, p_max)
                                  : dunkl::enumerate_levels(p, p_max);
        total_levels += res.levels.size();
    }
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

} // namespace

int main() {
    std::vector<dunkl::ModelParams> grid;
    for (int m : {1, 2, 3})
        for (int n : {1, 2})
            for (double mu : {0.0, 0.3, 0.7}) {
                dunkl::ModelParams p;
                p.m = m;
                p.n = n;
                p.mu_x = mu;
                p.mu_y = 0.3;
                grid.push_back(p);
                p.model = dunkl::Model::singular;
                p.alpha_x = 1.0;
                p.beta_x = 0.5;
                grid.push_back(p);
            }
    const int p_max = 40;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled in this build\n");
#endif
    std::size_t levels_serial = 0, levels_parallel = 0;
    // warm-up pass so both timings see hot caches
    run(false, grid, 8, levels_serial);
    const double t_serial = run(false, grid, p_max, levels_serial);
    const double t_parallel = run(true, grid, p_max, levels_parallel);
    std::printf("grid points: %zu, p_max: %d\n", grid.size(), p_max);
    std::printf("serial:   %.3f s (%zu levels)\n", t_serial, levels_serial);
    std::printf("parallel: %.3f s (%zu levels)\n", t_parallel, levels_parallel);
    if (levels_serial != levels_parallel) {
        std::printf("MISMATCH in level counts\n");
        return 1;
    }
    std::printf("speedup:  %.2fx\n", t_serial / t_parallel);
    return 0;
}
