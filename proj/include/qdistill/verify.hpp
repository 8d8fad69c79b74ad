#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdistill/protocol.hpp"

namespace qdistill {

struct InvariantResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<InvariantResult> results;

    bool all_pass() const;
    std::string summary() const;  // one line per invariant
};

// Group law, adjoint, symplectic bilinearity, single-qudit eigensystems and
// their Weyl actions, generator spectra, Bell orthonormality, and the
// maximally-entangled trace identity.
VerifyReport verify_algebra(const std::vector<int>& ds, std::uint64_t seed);

// Codeword property, analytic coset actions against the dense conjugation,
// block linearity and coset invariance, the kernel property, and composed
// encodings.
VerifyReport verify_encodings(const std::vector<int>& ds, std::uint64_t seed);

// Dense projection/decode rounds against the fast combinatorial update, for
// every stabilizer and outcome pair on seeded random Bell-diagonal inputs.
VerifyReport verify_oracle(const std::vector<int>& ds, std::uint64_t seed,
                           int states_per_d = 20, Exec exec = Exec::parallel);

// Coset-fidelity normalizations and the selection-optimality property: no
// (stabilizer, encoding, Bell label) beats the chosen ratio on any sampled
// state.
VerifyReport verify_maximality(const std::vector<int>& ds, std::uint64_t seed,
                               int states_per_d = 100, int encodings_per_stab = 20,
                               Exec exec = Exec::parallel);

BdsState random_bds(int d, std::uint64_t seed);

}  // namespace qdistill
