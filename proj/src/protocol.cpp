#include "qdistill/protocol.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qdistill {

namespace {

constexpr double kZeroProbability = 1e-15;

// Best coset of one stabilizer. Cosets are scanned in representative order
// across all syndromes, so the first strict maximum realizes the
// deterministic tie-break.
struct StabilizerBest {
    double ratio = -1.0;
    int rep_flat = -1;
    int syndrome = 0;
    double coset_prob = 0.0;
    double class_prob = 0.0;
};

StabilizerBest best_for_stabilizer(const Stabilizer& stab, const ErrorDistribution& dist) {
    const int d = stab.d;
    const int total = d * d * d * d;

    std::vector<double> class_prob(d, 0.0);
    std::vector<int> syndrome_of(total);
    for (int idx = 0; idx < total; ++idx) {
        int s = symplectic_product(stab.generator, element_from_flat(idx, d));
        syndrome_of[idx] = s;
        class_prob[s] += dist.p[idx];
    }

    std::vector<int> member_step(d);
    for (int m = 0; m < d; ++m) {
        member_step[m] = flat_index(stab.members[m]);
    }

    StabilizerBest best;
    std::vector<char> seen(total, 0);
    for (int idx = 0; idx < total; ++idx) {
        if (seen[idx]) continue;
        int s = syndrome_of[idx];
        double coset_prob = 0.0;
        ErrorElement rep = element_from_flat(idx, d);
        for (int m = 0; m < d; ++m) {
            int member = flat_index(add(rep, stab.members[m]));
            seen[member] = 1;
            coset_prob += dist.p[member];
        }
        if (class_prob[s] <= kZeroProbability) continue;
        double ratio = coset_prob / class_prob[s];
        if (ratio > best.ratio) {
            best = {ratio, idx, s, coset_prob, class_prob[s]};
        }
    }
    return best;
}

double run_efficiency(const DistillationRun& run) {
    double eff = 1.0;
    for (const IterationRecord& rec : run.records) {
        eff *= 0.5 * rec.choice.success_probability;
    }
    return eff;
}

}  // namespace

FimaxChoice fimax_select(const BdsState& state, Exec exec) {
    ErrorDistribution dist = two_copy_distribution(state);
    std::vector<Stabilizer> stabilizers = enumerate_stabilizers(state.d);
    std::vector<StabilizerBest> bests(stabilizers.size());

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < static_cast<int>(stabilizers.size()); ++i) {
            bests[i] = best_for_stabilizer(stabilizers[i], dist);
        }
    } else {
        for (std::size_t i = 0; i < stabilizers.size(); ++i) {
            bests[i] = best_for_stabilizer(stabilizers[i], dist);
        }
    }

    int winner = -1;
    for (std::size_t i = 0; i < stabilizers.size(); ++i) {
        if (bests[i].rep_flat < 0) continue;
        if (winner < 0 || bests[i].ratio > bests[winner].ratio) {
            winner = static_cast<int>(i);
        }
    }
    if (winner < 0) {
        throw DegenerateInput("no syndrome class has positive probability");
    }

    const Stabilizer& stab = stabilizers[winner];
    const StabilizerBest& best = bests[winner];
    FimaxChoice choice;
    choice.stabilizer = stab;
    choice.coset = coset_of(stab, element_from_flat(best.rep_flat, state.d));
    choice.syndrome = best.syndrome;
    choice.predicted_fidelity = best.ratio;
    choice.success_probability = best.class_prob;
    choice.correction = negate(coset_action(stab, choice.coset).label);
    return choice;
}

std::pair<BdsState, double> generic_step(const BdsState& state, const Stabilizer& stab,
                                         int s, const Coset& correction) {
    const int d = state.d;
    ErrorDistribution dist = two_copy_distribution(state);
    double class_prob = class_probability(dist, stab, s);
    if (class_prob <= kZeroProbability) {
        throw ImpossiblePostselection("kept syndrome class has zero probability");
    }
    ErrorElement correction_label = coset_action(stab, correction).label;

    BdsState out;
    out.d = d;
    out.p.assign(d * d, 0.0);
    for (const Coset& coset : cosets_in(stab, s)) {
        ErrorElement label = coset_action(stab, coset).label;
        ErrorElement rel = sub(label, correction_label);
        out.p[rel.l[0] * d + rel.k[0]] += coset_probability(dist, coset);
    }
    for (double& v : out.p) {
        v /= class_prob;
    }
    return {std::move(out), class_prob};
}

std::pair<BdsState, IterationRecord> fimax_step(const BdsState& state, Exec exec) {
    FimaxChoice choice = fimax_select(state, exec);
    auto [next, class_prob] = generic_step(state, choice.stabilizer, choice.syndrome, choice.coset);
    (void)class_prob;
    IterationRecord rec;
    rec.choice = choice;
    rec.fidelity_before = state.fidelity(0, 0);
    rec.fidelity_after = next.fidelity(0, 0);
    return {std::move(next), std::move(rec)};
}

double coset_fidelity(const Stabilizer& stab, const Encoding& enc, const Coset& coset,
                      int k, int l, int b) {
    const int d = stab.d;
    BlockDecomposition dec = conjugate_error(enc, coset.representative);
    const Matrix& t = dec.blocks[((b + dec.syndrome) % d + d) % d];
    Complex beta = (single_weyl(k, l, d).adjoint() * t).trace() / static_cast<double>(d);
    return std::norm(beta);
}

Matrix two_copy_dense(const BdsState& state) {
    const int d = state.d;
    const int dim = d * d * d * d;
    Matrix rho = Matrix::Zero(dim, dim);
    for (int k1 = 0; k1 < d; ++k1) {
        for (int l1 = 0; l1 < d; ++l1) {
            for (int k2 = 0; k2 < d; ++k2) {
                for (int l2 = 0; l2 < d; ++l2) {
                    double prob = state.p[l1 * d + k1] * state.p[l2 * d + k2];
                    if (prob == 0.0) continue;
                    Vector omega = bell_vector(ErrorElement{d, {k1, k2}, {l1, l2}});
                    rho.noalias() += prob * omega * omega.adjoint();
                }
            }
        }
    }
    return rho;
}

Matrix aabb_from_copies(const Matrix& rho1, const Matrix& rho2) {
    const int d2 = static_cast<int>(rho1.rows());
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(d2))));
    const int dim = d2 * d2;
    Matrix out(dim, dim);
    auto to_aabb = [d](int a1, int b1, int a2, int b2) {
        return ((a1 * d + a2) * d + b1) * d + b2;
    };
    for (int a1 = 0; a1 < d; ++a1)
        for (int b1 = 0; b1 < d; ++b1)
            for (int a2 = 0; a2 < d; ++a2)
                for (int b2 = 0; b2 < d; ++b2)
                    for (int a1p = 0; a1p < d; ++a1p)
                        for (int b1p = 0; b1p < d; ++b1p)
                            for (int a2p = 0; a2p < d; ++a2p)
                                for (int b2p = 0; b2p < d; ++b2p)
                                    out(to_aabb(a1, b1, a2, b2), to_aabb(a1p, b1p, a2p, b2p)) =
                                        rho1(a1 * d + b1, a1p * d + b1p) *
                                        rho2(a2 * d + b2, a2p * d + b2p);
    return out;
}

OracleResult standard_form_oracle(const Matrix& rho_two_copy, const Stabilizer& stab,
                                  const Encoding& enc, int a, int b) {
    const int d = stab.d;
    const int party = d * d;  // per-party dimension (two qudits)
    PrimeField field(d);
    a = field.reduce(a);
    b = field.reduce(b);
    if (rho_two_copy.rows() != party * party || rho_two_copy.cols() != party * party) {
        throw DimensionMismatch("two-copy state must be d^4 x d^4");
    }

    Matrix proj_a = Matrix::Zero(party, party);
    Matrix proj_b = Matrix::Zero(party, party);
    for (int k = 0; k < d; ++k) {
        proj_a.noalias() += enc.u.col(a * d + k) * enc.u.col(a * d + k).adjoint();
        proj_b.noalias() += enc.u.col(b * d + k) * enc.u.col(b * d + k).adjoint();
    }

    // Alice applies U^{-1} P(a); Bob the conjugated pair.
    Matrix alice = enc.u.adjoint() * proj_a;
    Matrix bob = (enc.u.adjoint() * proj_b).conjugate();
    Matrix map(party * party, party * party);
    for (int i = 0; i < party; ++i) {
        for (int j = 0; j < party; ++j) {
            map.block(i * party, j * party, party, party) = alice(i, j) * bob;
        }
    }

    Matrix mapped = map * rho_two_copy * map.adjoint();
    double prob = std::real(mapped.trace());
    if (prob <= kZeroProbability) {
        throw ImpossiblePostselection("outcome pair has zero probability");
    }
    mapped /= prob;

    // Trace out the measured copy (A1, B1); remaining order is A2 B2.
    Matrix out = Matrix::Zero(d * d, d * d);
    auto global = [d](int a1, int a2, int b1, int b2) {
        return ((a1 * d + a2) * d + b1) * d + b2;
    };
    for (int a2 = 0; a2 < d; ++a2)
        for (int b2 = 0; b2 < d; ++b2)
            for (int a2p = 0; a2p < d; ++a2p)
                for (int b2p = 0; b2p < d; ++b2p) {
                    Complex sum = 0.0;
                    for (int a1 = 0; a1 < d; ++a1)
                        for (int b1 = 0; b1 < d; ++b1)
                            sum += mapped(global(a1, a2, b1, b2), global(a1, a2p, b1, b2p));
                    out(a2 * d + b2, a2p * d + b2p) = sum;
                }
    return {std::move(out), prob};
}

DistillationRun distill(const BdsState& state, double target, int max_iterations, Exec exec) {
    DistillationRun run;
    BdsState current = state;
    if (current.fidelity(0, 0) >= target) {
        run.reached_target = true;
        run.efficiency = 1.0;
        return run;
    }
    for (int it = 0; it < max_iterations; ++it) {
        auto [next, rec] = fimax_step(current, exec);
        run.records.push_back(rec);
        current = std::move(next);
        if (rec.fidelity_after >= target) {
            run.reached_target = true;
            run.efficiency = run_efficiency(run);
            return run;
        }
        if (rec.fidelity_after - rec.fidelity_before < kStallThreshold) {
            break;  // stalled below the target
        }
    }
    run.reached_target = false;
    run.efficiency = 0.0;
    return run;
}

DistillationRun distill(const DenseState& state, double target, int max_iterations,
                        NonBdsMode mode, Exec exec) {
    // Both modes reduce the dense state to its Bell diagonal before iterating:
    // the twirl replaces the state by that diagonal, and diag mode uses the
    // same diagonal as the error probabilities driving the selection.
    (void)mode;
    return distill(weyl_twirl(state), target, max_iterations, exec);
}

DistillationRun distill_any(const AnyState& state, double target, int max_iterations,
                            NonBdsMode mode, Exec exec) {
    if (const BdsState* bds = std::get_if<BdsState>(&state)) {
        return distill(*bds, target, max_iterations, exec);
    }
    return distill(std::get<DenseState>(state), target, max_iterations, mode, exec);
}

nlohmann::json to_json(const DistillationRun& run) {
    nlohmann::json records = nlohmann::json::array();
    for (const IterationRecord& rec : run.records) {
        const ErrorElement& g = rec.choice.stabilizer.generator;
        const ErrorElement& r = rec.choice.coset.representative;
        records.push_back({
            {"fidelity_before", rec.fidelity_before},
            {"fidelity_after", rec.fidelity_after},
            {"success_probability", rec.choice.success_probability},
            {"generator", {g.k[0], g.k[1], g.l[0], g.l[1]}},
            {"coset_representative", {r.k[0], r.k[1], r.l[0], r.l[1]}},
            {"syndrome", rec.choice.syndrome},
            {"correction", {rec.choice.correction.k[0], rec.choice.correction.l[0]}},
        });
    }
    return {{"records", std::move(records)},
            {"reached_target", run.reached_target},
            {"efficiency", run.efficiency}};
}

}  // namespace qdistill
