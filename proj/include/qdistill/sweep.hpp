#pragma once

#include <cstdint>
#include <string>

#include "qdistill/protocol.hpp"

namespace qdistill {

// Family sweep over a parameter grid. CSV columns:
//   family,d,parameter,input_fidelity,reached,n_iterations,efficiency
struct GridSweepConfig {
    std::string family;  // "isotropic" | "offline"
    int d = 3;
    double p_from = 0.0;
    double p_to = 1.0;
    double step = 0.01;
    double target = 0.999;
    int max_iterations = kDefaultMaxIterations;
};

// Random pure-state benchmark, grouped into fidelity bins of width 0.01
// (bin i is centered at i/100). Adds seed,bin columns; efficiency is the
// bin mean over all samples, reached the reached fraction, n_iterations the
// mean over reached samples.
struct RandomSweepConfig {
    int d = 2;
    int samples_per_bin = 100;
    int bins = 0;  // 0: family default (91 bins for d=2, 61 for d=3)
    std::uint64_t seed = 1;
    double target = 0.999;
    int max_iterations = kDefaultMaxIterations;
    NonBdsMode mode = NonBdsMode::twirl;
};

std::string run_grid_sweep(const GridSweepConfig& config, Exec exec = Exec::parallel);
std::string run_random_sweep(const RandomSweepConfig& config, Exec exec = Exec::parallel);

}  // namespace qdistill
