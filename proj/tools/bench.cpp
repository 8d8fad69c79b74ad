// Benchmark comparing the serial reference kernels against the OpenMP paths:
// selection scans over all stabilizers and a family sweep. Checks that both
// paths agree before timing them.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qdistill/sweep.hpp"
#include "qdistill/verify.hpp"

using namespace qdistill;

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps) {
    auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-32s serial %9.3f ms   openmp %9.3f ms   speedup %.2fx\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp\n");
#endif

    for (int d : {3, 5, 7}) {
        std::vector<BdsState> states;
        for (int i = 0; i < 8; ++i) states.push_back(random_bds(d, 1000 + i));

        for (const BdsState& s : states) {
            FimaxChoice a = fimax_select(s, Exec::serial);
            FimaxChoice b = fimax_select(s, Exec::parallel);
            if (a.predicted_fidelity != b.predicted_fidelity ||
                !(a.coset.representative == b.coset.representative)) {
                std::printf("MISMATCH between serial and parallel selection at d=%d\n", d);
                return 1;
            }
        }

        const int reps = d >= 7 ? 2 : 10;
        double serial = time_ms(
            [&] {
                for (const BdsState& s : states) fimax_select(s, Exec::serial);
            },
            reps);
        double parallel = time_ms(
            [&] {
                for (const BdsState& s : states) fimax_select(s, Exec::parallel);
            },
            reps);
        char name[64];
        std::snprintf(name, sizeof(name), "fimax_select d=%d (8 states)", d);
        report(name, serial, parallel);
    }

    GridSweepConfig config;
    config.family = "isotropic";
    config.d = 3;
    config.p_from = 0.0;
    config.p_to = 1.0;
    config.step = 0.01;
    std::string serial_csv = run_grid_sweep(config, Exec::serial);
    std::string parallel_csv = run_grid_sweep(config, Exec::parallel);
    if (serial_csv != parallel_csv) {
        std::printf("MISMATCH between serial and parallel sweep output\n");
        return 1;
    }
    double serial = time_ms([&] { run_grid_sweep(config, Exec::serial); }, 3);
    double parallel = time_ms([&] { run_grid_sweep(config, Exec::parallel); }, 3);
    report("isotropic sweep d=3 (101 rows)", serial, parallel);

    VerifyReport sr = verify_oracle({2}, 1, 4, Exec::serial);
    VerifyReport pr = verify_oracle({2}, 1, 4, Exec::parallel);
    if (sr.summary() != pr.summary()) {
        std::printf("MISMATCH between serial and parallel oracle suite\n");
        return 1;
    }
    serial = time_ms([&] { verify_oracle({2, 3}, 1, 2, Exec::serial); }, 1);
    parallel = time_ms([&] { verify_oracle({2, 3}, 1, 2, Exec::parallel); }, 1);
    report("oracle suite d=2,3 (2 states)", serial, parallel);
    return 0;
}
