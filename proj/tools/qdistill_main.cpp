// qdistill: stabilizer-based entanglement distillation for prime-dimension
// qudit pairs. Subcommands: enumerate, distill, sweep, verify.
//
// Exit codes: 0 success, 1 protocol-level failure (target not reached,
// verification failed), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qdistill/stabilizer.hpp"
#include "qdistill/sweep.hpp"
#include "qdistill/verify.hpp"

namespace {

using namespace qdistill;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw InvalidMixture("cannot write output file: " + out_path);
    }
    out << text;
}

int require_prime(int d) {
    if (!is_prime(d)) {
        std::cerr << "d must be prime\n";
        return 2;
    }
    return 0;
}

int cmd_enumerate(int d, const std::string& out_path) {
    if (int rc = require_prime(d)) return rc;
    std::vector<Stabilizer> stabs = enumerate_stabilizers(d);
    std::string text;
    for (const Stabilizer& s : stabs) {
        const ErrorElement& g = s.generator;
        text += std::to_string(g.k[0]) + "," + std::to_string(g.k[1]) + "," +
                std::to_string(g.l[0]) + "," + std::to_string(g.l[1]) + "\n";
    }
    emit(text, out_path);
    std::cerr << stabs.size() << " stabilizers\n";
    return 0;
}

int cmd_distill(const std::string& state_path, double target, int max_iter,
                const std::string& nonbds, const std::string& out_path) {
    AnyState state = load_state(state_path);
    NonBdsMode mode = nonbds == "diag" ? NonBdsMode::diag : NonBdsMode::twirl;
    DistillationRun run = distill_any(state, target, max_iter, mode);
    emit(to_json(run).dump(2) + "\n", out_path);
    return run.reached_target ? 0 : 1;
}

int cmd_sweep(const std::string& family, int d, double p_from, double p_to, double step,
              int samples, int bins, std::uint64_t seed, double target, int max_iter,
              const std::string& nonbds, const std::string& out_path) {
    if (int rc = require_prime(family == "offline" ? 3 : d)) return rc;
    std::string csv;
    if (family == "random") {
        RandomSweepConfig config;
        config.d = d;
        config.samples_per_bin = samples;
        config.bins = bins;
        config.seed = seed;
        config.target = target;
        config.max_iterations = max_iter;
        config.mode = nonbds == "diag" ? NonBdsMode::diag : NonBdsMode::twirl;
        csv = run_random_sweep(config);
    } else {
        GridSweepConfig config;
        config.family = family;
        config.d = d;
        config.p_from = p_from;
        config.p_to = p_to;
        config.step = step;
        config.target = target;
        config.max_iterations = max_iter;
        csv = run_grid_sweep(config);
    }
    emit(csv, out_path);
    return 0;
}

int cmd_verify(const std::string& suite, std::vector<int> ds, std::uint64_t seed) {
    if (ds.empty()) ds = {2, 3};
    for (int d : ds) {
        if (int rc = require_prime(d)) return rc;
    }
    VerifyReport report;
    if (suite == "algebra") {
        report = verify_algebra(ds, seed);
    } else if (suite == "encodings") {
        report = verify_encodings(ds, seed);
    } else if (suite == "oracle") {
        report = verify_oracle(ds, seed);
    } else if (suite == "maximality") {
        report = verify_maximality(ds, seed);
    } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    std::cout << report.summary();
    if (!report.all_pass()) {
        std::cout << "verification FAILED\n";
        return 1;
    }
    std::cout << "all invariants hold\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stabilizer-based entanglement distillation for qudit pairs"};
    app.require_subcommand(1);

    int d = 3;
    std::string state_path, out_path, family = "isotropic", nonbds = "twirl",
                suite = "algebra";
    double target = 0.999, p_from = 0.0, p_to = 1.0, step = 0.01;
    int max_iter = 200, samples = 100, bins = 0;
    std::uint64_t seed = 1;
    std::vector<int> d_list;

    CLI::App* enumerate = app.add_subcommand("enumerate", "list all stabilizer generators");
    enumerate->add_option("--d", d, "prime qudit dimension")->required();
    enumerate->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* dist = app.add_subcommand("distill", "run the distillation loop on a state file");
    dist->add_option("--state", state_path, "input state JSON file")->required();
    dist->add_option("--target", target, "target fidelity (default 0.999)");
    dist->add_option("--max-iter", max_iter, "iteration cap (default 200)");
    dist->add_option("--nonbds", nonbds, "non-Bell-diagonal handling: twirl|diag")
        ->check(CLI::IsMember({"twirl", "diag"}));
    dist->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "family sweep or random benchmark, CSV output");
    sweep->add_option("--family", family, "isotropic|offline|random")
        ->check(CLI::IsMember({"isotropic", "offline", "random"}));
    sweep->add_option("--d", d, "prime qudit dimension");
    sweep->add_option("--p-from", p_from, "grid start");
    sweep->add_option("--p-to", p_to, "grid end (inclusive)");
    sweep->add_option("--step", step, "grid step");
    sweep->add_option("--samples", samples, "random family: samples per bin");
    sweep->add_option("--bins", bins, "random family: number of 0.01-wide bins");
    sweep->add_option("--seed", seed, "master seed for the random family");
    sweep->add_option("--target", target, "target fidelity (default 0.999)");
    sweep->add_option("--max-iter", max_iter, "iteration cap (default 200)");
    sweep->add_option("--nonbds", nonbds, "non-Bell-diagonal handling: twirl|diag")
        ->check(CLI::IsMember({"twirl", "diag"}));
    sweep->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("--suite", suite, "algebra|encodings|oracle|maximality")->required();
    verify->add_option("--d", d_list, "comma-separated prime dimensions (default 2,3)")
        ->delimiter(',');
    verify->add_option("--seed", seed, "seed for the sampled invariants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(d, out_path);
        if (dist->parsed()) return cmd_distill(state_path, target, max_iter, nonbds, out_path);
        if (sweep->parsed())
            return cmd_sweep(family, d, p_from, p_to, step, samples, bins, seed, target,
                             max_iter, nonbds, out_path);
        if (verify->parsed()) return cmd_verify(suite, d_list, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
