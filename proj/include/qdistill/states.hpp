#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "qdistill/stabilizer.hpp"

#include "json.hpp"

namespace qdistill {

// Bell-diagonal state: probability p[l*d + k] on |Omega_{k,l}>, serialized in
// k-fastest order (Omega_00, Omega_10, ..., Omega_{d-1,d-1}).
struct BdsState {
    int d = 2;
    std::vector<double> p;

    static BdsState pure(int d, int k, int l);
    double fidelity(int k, int l) const { return p[l * d + k]; }
    double total() const;
};

// Dense single-copy bipartite state on C^d (x) C^d (Hermitian, PSD, trace 1).
struct DenseState {
    int d = 2;
    Matrix rho;
};

double fidelity(const BdsState& state, int k, int l);
double fidelity(const DenseState& state, int k, int l);

// Bell-basis diagonal of a dense state; preserves every diagonal element.
BdsState weyl_twirl(const DenseState& state);

// p |Omega_00><Omega_00| + (1-p) * maximally mixed. p may run slightly
// negative (down to -1/(d^2-1)) for sweeps; entries must stay nonnegative.
BdsState isotropic_state(int d, double p);

// d = 3 family: p * (equal mixture of Omega_00, Omega_10, Omega_01) plus
// (1-p) * maximally mixed. Fidelity stays <= 1/3 for the whole range.
BdsState offline_state(double p);

DenseState random_pure_state(int d, std::uint64_t seed);

// Product distribution p(e) = p_{k1,l1} p_{k2,l2} over two-copy elements.
ErrorDistribution two_copy_distribution(const BdsState& state);

// State files: {"d": int, "kind": "bds"|"dense", "bell_probs": [...],
// "matrix": [[[re,im],...],...]}.
using AnyState = std::variant<BdsState, DenseState>;

nlohmann::json to_json(const BdsState& state);
nlohmann::json to_json(const DenseState& state);
AnyState state_from_json(const nlohmann::json& j);
AnyState load_state(const std::string& path);
void save_state(const AnyState& state, const std::string& path);

}  // namespace qdistill
