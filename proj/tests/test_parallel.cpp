#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qdistill/sweep.hpp"
#include "qdistill/verify.hpp"

using namespace qdistill;

// The OpenMP kernels must be bitwise interchangeable with the serial
// reference paths.

TEST_CASE("fimax selection: parallel equals serial") {
    for (int d : {2, 3}) {
        for (int i = 0; i < 25; ++i) {
            BdsState state = random_bds(d, 100 + i);
            FimaxChoice serial = fimax_select(state, Exec::serial);
            FimaxChoice parallel = fimax_select(state, Exec::parallel);
            CHECK(serial.stabilizer.generator == parallel.stabilizer.generator);
            CHECK(serial.coset.representative == parallel.coset.representative);
            CHECK(serial.syndrome == parallel.syndrome);
            CHECK(serial.predicted_fidelity == parallel.predicted_fidelity);
            CHECK(serial.success_probability == parallel.success_probability);
            CHECK(serial.correction == parallel.correction);
        }
    }
}

TEST_CASE("grid sweep: parallel CSV is byte-identical to serial") {
    GridSweepConfig config;
    config.family = "isotropic";
    config.d = 3;
    config.p_from = 0.0;
    config.p_to = 1.0;
    config.step = 0.05;
    std::string serial = run_grid_sweep(config, Exec::serial);
    std::string parallel = run_grid_sweep(config, Exec::parallel);
    CHECK(serial == parallel);
    CHECK(run_grid_sweep(config, Exec::parallel) == parallel);  // reproducible
}

TEST_CASE("random sweep: parallel CSV is byte-identical to serial") {
    RandomSweepConfig config;
    config.d = 2;
    config.samples_per_bin = 5;
    config.bins = 30;
    config.seed = 7;
    std::string serial = run_random_sweep(config, Exec::serial);
    std::string parallel = run_random_sweep(config, Exec::parallel);
    CHECK(serial == parallel);
}

TEST_CASE("verify suites: parallel equals serial") {
    VerifyReport serial = verify_oracle({2}, 11, 3, Exec::serial);
    VerifyReport parallel = verify_oracle({2}, 11, 3, Exec::parallel);
    REQUIRE(serial.results.size() == parallel.results.size());
    for (std::size_t i = 0; i < serial.results.size(); ++i) {
        CHECK(serial.results[i].max_residual == parallel.results[i].max_residual);
        CHECK(serial.results[i].pass == parallel.results[i].pass);
    }
}
