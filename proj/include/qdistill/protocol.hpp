#pragma once

#include "qdistill/encoding.hpp"
#include "qdistill/states.hpp"

namespace qdistill {

// Hot loops ship in two variants: a plain serial reference and an
// OpenMP-parallel one. Results are bitwise identical; tests compare them and
// the bench target times them.
enum class Exec { serial, parallel };

// Outcome of the selection scan: the (stabilizer, coset) pair maximizing
// P(C)/P(E(s)), with ties broken by the deterministic (generator,
// representative) order.
struct FimaxChoice {
    Stabilizer stabilizer;
    Coset coset;
    int syndrome = 0;
    double predicted_fidelity = 0.0;   // P(C_max)/P(E(s_max))
    double success_probability = 0.0;  // P(E(s_max))
    ErrorElement correction;           // single-qudit adjoint label of the coset action
};

struct IterationRecord {
    FimaxChoice choice;
    double fidelity_before = 0.0;
    double fidelity_after = 0.0;
};

struct DistillationRun {
    std::vector<IterationRecord> records;
    bool reached_target = false;
    double efficiency = 0.0;  // 2^{-N_it} * prod_i p_i when the target is reached
};

FimaxChoice fimax_select(const BdsState& state, Exec exec = Exec::parallel);

// One selection + postselected update. For Bell-diagonal input the output
// fidelity equals the predicted P(C_max)/P(E(s_max)) exactly.
std::pair<BdsState, IterationRecord> fimax_step(const BdsState& state,
                                                Exec exec = Exec::parallel);

// Fixed-parameter update: keep syndrome s, correct toward coset `correction`.
// Output probability at (k,l) sums P(C)/P(E(s)) over cosets whose action
// label relative to the correction coset is (k,l).
std::pair<BdsState, double> generic_step(const BdsState& state, const Stabilizer& stab,
                                         int s, const Coset& correction);

// f_C(k,l) = |Tr(W_{k,l}^dagger T) / d|^2 with T the conjugate_error block of
// the coset representative targeting codespace b + s.
double coset_fidelity(const Stabilizer& stab, const Encoding& enc, const Coset& coset,
                      int k, int l, int b = 0);

struct OracleResult {
    Matrix state;        // residual d^2 x d^2 bipartite state (second copy)
    double probability;  // probability of the specific outcome pair (a, b)
};

// Dense reference for one protocol round: projects a two-copy state (qudit
// order A1 A2 B1 B2) onto the outcome-(a,b) codespaces, undoes the encodings,
// and traces out the measured copy. Verifies the fast combinatorial path.
OracleResult standard_form_oracle(const Matrix& rho_two_copy, const Stabilizer& stab,
                                  const Encoding& enc, int a, int b);

// Builds sum_e p(e) |Omega(e)><Omega(e)| in A1 A2 B1 B2 order (d^4 x d^4).
Matrix two_copy_dense(const BdsState& state);
// Reorders rho1 (x) rho2 from per-copy (A1 B1)(A2 B2) order into A1 A2 B1 B2.
Matrix aabb_from_copies(const Matrix& rho1, const Matrix& rho2);

enum class NonBdsMode { diag, twirl };

inline constexpr double kStallThreshold = 1e-12;
inline constexpr int kDefaultMaxIterations = 200;

DistillationRun distill(const BdsState& state, double target,
                        int max_iterations = kDefaultMaxIterations,
                        Exec exec = Exec::parallel);
DistillationRun distill(const DenseState& state, double target,
                        int max_iterations = kDefaultMaxIterations,
                        NonBdsMode mode = NonBdsMode::twirl, Exec exec = Exec::parallel);
DistillationRun distill_any(const AnyState& state, double target,
                            int max_iterations = kDefaultMaxIterations,
                            NonBdsMode mode = NonBdsMode::twirl, Exec exec = Exec::parallel);

nlohmann::json to_json(const DistillationRun& run);

}  // namespace qdistill
