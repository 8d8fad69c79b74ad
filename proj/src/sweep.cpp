#include "qdistill/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qdistill/rng.hpp"

namespace qdistill {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

struct GridRow {
    double parameter = 0.0;
    double input_fidelity = 0.0;
    bool reached = false;
    int n_iterations = 0;
    double efficiency = 0.0;
};

}  // namespace

std::string run_grid_sweep(const GridSweepConfig& config, Exec exec) {
    if (config.family != "isotropic" && config.family != "offline") {
        throw InvalidMixture("unknown sweep family: " + config.family);
    }
    if (config.step <= 0.0 || config.p_to < config.p_from) {
        throw InvalidMixture("sweep grid is empty or has nonpositive step");
    }
    const int d = config.family == "offline" ? 3 : config.d;
    PrimeField field(d);
    // Inclusive decimal grid; the ratio is rounded so 0.005-style steps land
    // exactly on p_to, and accumulated points are clamped into the range.
    const int rows =
        static_cast<int>(std::floor((config.p_to - config.p_from) / config.step + 1e-9)) + 1;

    auto make_state = [&](double p) {
        return config.family == "offline" ? offline_state(p) : isotropic_state(d, p);
    };
    make_state(config.p_from);  // validate the range before any work
    make_state(config.p_to);

    std::vector<GridRow> out(rows);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (int i = 0; i < rows; ++i) {
        double p = std::min(config.p_from + i * config.step, config.p_to);
        BdsState state = make_state(p);
        DistillationRun run =
            distill(state, config.target, config.max_iterations, Exec::serial);
        out[i] = {p, state.fidelity(0, 0), run.reached_target,
                  static_cast<int>(run.records.size()), run.efficiency};
    }

    std::ostringstream csv;
    csv << "family,d,parameter,input_fidelity,reached,n_iterations,efficiency\n";
    for (const GridRow& row : out) {
        csv << config.family << ',' << d << ',' << fmt(row.parameter) << ','
            << fmt(row.input_fidelity) << ',' << (row.reached ? 1 : 0) << ','
            << row.n_iterations << ',' << fmt(row.efficiency) << '\n';
    }
    return csv.str();
}

std::string run_random_sweep(const RandomSweepConfig& config, Exec exec) {
    const int d = config.d;
    PrimeField field(d);
    if (config.samples_per_bin < 1) {
        throw InvalidMixture("samples per bin must be >= 1");
    }
    int bins = config.bins;
    if (bins == 0) bins = d == 2 ? 91 : 61;
    if (bins < 1 || bins > 100) {
        throw InvalidMixture("bin count must lie in [1, 100]");
    }

    // Deterministic rejection sampling: candidate j is fully determined by
    // (seed, j), so acceptance does not depend on evaluation order.
    std::vector<std::vector<std::uint64_t>> accepted(bins);
    int full = 0;
    const long long draw_cap = 20'000'000;
    for (long long j = 0; j < draw_cap && full < bins; ++j) {
        std::uint64_t s = mix_seed(config.seed, static_cast<std::uint64_t>(j));
        DenseState psi = random_pure_state(d, s);
        int bin = static_cast<int>(std::lround(fidelity(psi, 0, 0) * 100.0));
        if (bin < 0 || bin >= bins) continue;
        if (static_cast<int>(accepted[bin].size()) >= config.samples_per_bin) continue;
        accepted[bin].push_back(s);
        if (static_cast<int>(accepted[bin].size()) == config.samples_per_bin) ++full;
    }

    struct Sample {
        double input_fidelity = 0.0;
        bool reached = false;
        int n_iterations = 0;
        double efficiency = 0.0;
    };
    std::vector<std::vector<Sample>> results(bins);
    for (int b = 0; b < bins; ++b) results[b].resize(accepted[b].size());

    std::vector<std::pair<int, int>> tasks;
    for (int b = 0; b < bins; ++b) {
        for (int i = 0; i < static_cast<int>(accepted[b].size()); ++i) {
            tasks.emplace_back(b, i);
        }
    }
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (int t = 0; t < static_cast<int>(tasks.size()); ++t) {
        auto [b, i] = tasks[t];
        DenseState psi = random_pure_state(d, accepted[b][i]);
        DistillationRun run =
            distill(psi, config.target, config.max_iterations, config.mode, Exec::serial);
        results[b][i] = {fidelity(psi, 0, 0), run.reached_target,
                         static_cast<int>(run.records.size()), run.efficiency};
    }

    std::ostringstream csv;
    csv << "family,d,parameter,input_fidelity,reached,n_iterations,efficiency,seed,bin\n";
    for (int b = 0; b < bins; ++b) {
        double mean_f = 0.0, mean_eff = 0.0, reached_frac = 0.0, mean_iters = 0.0;
        int reached_count = 0;
        for (const Sample& s : results[b]) {
            mean_f += s.input_fidelity;
            mean_eff += s.efficiency;
            if (s.reached) {
                reached_count += 1;
                mean_iters += s.n_iterations;
            }
        }
        const int count = static_cast<int>(results[b].size());
        if (count > 0) {
            mean_f /= count;
            mean_eff /= count;
            reached_frac = static_cast<double>(reached_count) / count;
        }
        if (reached_count > 0) mean_iters /= reached_count;
        csv << "random," << d << ',' << fmt(b * 0.01) << ',' << fmt(mean_f) << ','
            << fmt(reached_frac) << ',' << fmt(mean_iters) << ',' << fmt(mean_eff) << ','
            << config.seed << ',' << b << '\n';
    }
    return csv.str();
}

}  // namespace qdistill
