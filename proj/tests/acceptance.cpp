// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances in code.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "qdistill/sweep.hpp"
#include "qdistill/verify.hpp"

using namespace qdistill;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int index, const std::string& name, bool pass, double seconds,
            const std::string& detail) {
    std::printf("[%s] %d. %-38s %7.2f s  %s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                seconds, detail.c_str());
    if (!pass) ++failures;
}

BdsState reference_state() {
    std::vector<double> p(9, 0.055);
    p[1 * 3 + 2] = 0.56;
    return {3, p};
}

double elapsed(const Clock::time_point& t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion_worked_example() {
    auto t0 = Clock::now();
    std::ostringstream detail;
    bool pass = true;

    FimaxChoice choice = fimax_select(reference_state());
    ActionOperator action = coset_action(choice.stabilizer, choice.coset);
    pass &= choice.syndrome == 1;
    pass &= action.label.k[0] == 0 && action.label.l[0] == 1;
    pass &= std::abs(choice.success_probability - 0.5) <= 0.01;
    pass &= std::abs(choice.predicted_fidelity - 0.63) <= 0.01;

    auto [next, rec] = fimax_step(reference_state());
    const double expected[9] = {0.63, 0.13, 0.13, 0.02, 0.02, 0.02, 0.02, 0.02, 0.02};
    double worst = 0.0;
    for (int i = 0; i < 9; ++i) {
        worst = std::max(worst, std::abs(next.p[i] - expected[i]));
    }
    pass &= worst <= 0.01;

    double secs = elapsed(t0);
    pass &= secs < 1.0;
    detail << "syndrome " << choice.syndrome << ", action W(" << action.label.k[0] << ","
           << action.label.l[0] << "), p " << choice.success_probability << ", ratio "
           << choice.predicted_fidelity << ", max output dev " << worst;
    report(1, "worked-example end-to-end", pass, secs, detail.str());
}

void criterion_structure_counts() {
    auto t0 = Clock::now();
    bool pass = true;
    std::ostringstream detail;
    for (int d : {2, 3}) {
        std::vector<Stabilizer> stabs = enumerate_stabilizers(d);
        int expected = (d * d + 1) * (d + 1);
        pass &= static_cast<int>(stabs.size()) == expected;
        detail << "d=" << d << ": " << stabs.size() << "/" << expected << " stabilizers ";
        for (const Stabilizer& stab : stabs) {
            for (int s = 0; s < d; ++s) {
                pass &= static_cast<int>(syndrome_class(stab, s).size()) == d * d * d;
                pass &= static_cast<int>(cosets_in(stab, s).size()) == d * d;
            }
        }
    }
    double secs = elapsed(t0);
    pass &= secs < 1.0;
    report(2, "structure counts", pass, secs, detail.str());
}

void criterion_oracle_equivalence() {
    auto t0 = Clock::now();
    VerifyReport rep = verify_oracle({2, 3}, 20250810, 20);
    double worst = 0.0;
    for (const InvariantResult& r : rep.results) worst = std::max(worst, r.max_residual);
    double secs = elapsed(t0);
    bool pass = rep.all_pass() && secs < 300.0;
    std::ostringstream detail;
    detail << "max residual " << worst << " (tol 1e-9), all stabilizers, all outcome pairs, "
              "20 states per d";
    report(3, "dense oracle equals fast path", pass, secs, detail.str());
}

VerifyReport maximality_report() {
    return verify_maximality({2, 3}, 20250810, 100, 20);
}

void criterion_maximality(const VerifyReport& rep, double secs) {
    bool pass = secs < 600.0;
    double worst = -1.0;
    for (const InvariantResult& r : rep.results) {
        if (r.name.find("beats") != std::string::npos) {
            pass &= r.pass;
            worst = std::max(worst, r.max_residual);
        }
    }
    std::ostringstream detail;
    detail << "max excess over selected ratio " << worst << " (tol 1e-9), 100 states and "
              "20 composed encodings per stabilizer";
    report(4, "selection maximality", pass, secs, detail.str());
}

void criterion_normalizations(const VerifyReport& rep, double secs) {
    bool pass = true;
    double worst = 0.0;
    for (const InvariantResult& r : rep.results) {
        if (r.name.find("sums to 1") != std::string::npos) {
            pass &= r.pass;
            worst = std::max(worst, r.max_residual);
        }
    }
    std::ostringstream detail;
    detail << "max deviation " << worst << " (tol 1e-9), per coset and per label";
    report(7, "coset-fidelity normalizations", pass, secs, detail.str());
}

struct SweepRow {
    double parameter = 0.0;
    double input_fidelity = 0.0;
    double efficiency = 0.0;
};

std::vector<SweepRow> parse_rows(const std::string& csv) {
    std::vector<SweepRow> rows;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        SweepRow row;
        std::istringstream fields(line);
        std::string f;
        std::getline(fields, f, ',');  // family
        std::getline(fields, f, ',');  // d
        std::getline(fields, f, ',');
        row.parameter = std::stod(f);
        std::getline(fields, f, ',');
        row.input_fidelity = std::stod(f);
        std::getline(fields, f, ',');  // reached
        std::getline(fields, f, ',');  // n_iterations
        std::getline(fields, f, ',');
        row.efficiency = std::stod(f);
        rows.push_back(row);
    }
    return rows;
}

// Every row with efficiency > 0 must sit above threshold - step, every row
// with efficiency 0 below threshold + step (in fidelity units).
bool check_threshold(const std::vector<SweepRow>& rows, double threshold,
                     double fidelity_step, std::string* msg) {
    bool pass = true;
    for (const SweepRow& row : rows) {
        if (row.efficiency > 0.0 && row.input_fidelity <= threshold - fidelity_step - 1e-12) {
            pass = false;
            *msg += " spurious distillation at F=" + std::to_string(row.input_fidelity);
        }
        if (row.efficiency == 0.0 && row.input_fidelity >= threshold + fidelity_step + 1e-12) {
            pass = false;
            *msg += " missed distillation at F=" + std::to_string(row.input_fidelity);
        }
    }
    return pass;
}

void criterion_thresholds() {
    auto t0 = Clock::now();
    std::string msg;
    bool pass = true;

    GridSweepConfig iso;
    iso.family = "isotropic";
    iso.d = 3;
    iso.p_from = 0.0;
    iso.p_to = 1.0;
    iso.step = 0.005;
    std::vector<SweepRow> iso_rows = parse_rows(run_grid_sweep(iso));
    pass &= iso_rows.size() == 201;
    // dF/dp = 8/9 for the isotropic family at d=3.
    pass &= check_threshold(iso_rows, 1.0 / 3.0, 0.005 * 8.0 / 9.0, &msg);

    GridSweepConfig ol;
    ol.family = "offline";
    ol.d = 3;
    ol.p_from = 0.0;
    ol.p_to = 1.0;
    ol.step = 0.005;
    std::vector<SweepRow> ol_rows = parse_rows(run_grid_sweep(ol));
    pass &= ol_rows.size() == 201;
    // dF/dp = 2/9 for the off-line family.
    pass &= check_threshold(ol_rows, 0.25, 0.005 * 2.0 / 9.0, &msg);

    auto [next, rec] = fimax_step(offline_state(0.7));
    pass &= next.fidelity(0, 0) > 1.0 / 3.0;
    (void)rec;

    double secs = elapsed(t0);
    pass &= secs < 60.0;
    if (msg.empty()) {
        msg = "isotropic threshold 1/3, off-line threshold 0.25, first off-line step above 1/3";
    }
    report(5, "distillability thresholds", pass, secs, msg);
}

void criterion_algebra() {
    auto t0 = Clock::now();
    VerifyReport rep = verify_algebra({2, 3}, 20250810);
    double worst = 0.0;
    for (const InvariantResult& r : rep.results) worst = std::max(worst, r.max_residual);
    double secs = elapsed(t0);
    bool pass = rep.all_pass() && secs < 30.0;
    std::ostringstream detail;
    detail << "max residual " << worst << " across " << rep.results.size() << " invariants";
    report(6, "algebra residuals", pass, secs, detail.str());
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_worked_example();
    criterion_structure_counts();
    criterion_oracle_equivalence();

    auto t0 = Clock::now();
    VerifyReport maximality = maximality_report();
    double max_secs = elapsed(t0);
    criterion_maximality(maximality, max_secs);

    criterion_thresholds();
    criterion_algebra();
    criterion_normalizations(maximality, max_secs);

    if (failures > 0) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
