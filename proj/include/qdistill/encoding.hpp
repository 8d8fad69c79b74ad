#pragma once

#include <vector>

#include "qdistill/rng.hpp"
#include "qdistill/stabilizer.hpp"

namespace qdistill {

enum class EncodingKind { canonic, composed };

// Unitary U on C^{d^2} whose column x*d + k is the codeword |u_{x,k}>, an
// eigenvector of W(g) with label x. The canonic encoding uses the product of
// the generator factors' Weyl eigenbases; composed encodings append
// block-diagonal unitaries (one d x d block per codespace).
struct Encoding {
    Stabilizer stabilizer;
    Matrix u;
    EncodingKind kind = EncodingKind::canonic;
};

// Eigenvalue of W(g) on codespace x. For d = 2 factors with ab = 1 the label
// carries a fixed -ab/2 omega-power offset per factor.
PhaseExponent generator_eigenvalue(const Stabilizer& stab, int x);

Encoding canonic_encoding(const Stabilizer& stab);

// U * (sum_x |x><x| (x) Y_x). Each block must be unitary (InvalidBlock).
Encoding compose_encoding(const Encoding& base, const std::vector<Matrix>& blocks);

// Effective operator a coset applies on the kept qudit in the canonic
// encoding: T_{x+s} = tau^{lambda_slope*x + lambda_offset} W(label), where x
// is the source codespace label. The Weyl label is shared by every member of
// the coset; the affine phase is not.
struct ActionOperator {
    ErrorElement label;  // single-qudit (t, -sigma)
    int lambda_slope = 0;
    int lambda_offset = 0;

    PhaseExponent phase_at(int source_label, int d) const {
        return phase_reduce({lambda_slope * source_label + lambda_offset}, d);
    }
};

ActionOperator error_action(const Stabilizer& stab, const ErrorElement& e);
ActionOperator coset_action(const Stabilizer& stab, const Coset& coset);

// U^dagger W(e) U factored into shifted blocks: blocks[x] maps the
// computational copy of codespace x - s into that of codespace x. Residual
// outside the shift pattern or a non-unitary block raises StructureViolation.
struct BlockDecomposition {
    int syndrome = 0;
    std::vector<Matrix> blocks;  // indexed by target codespace label
};

BlockDecomposition conjugate_error(const Encoding& enc, const ErrorElement& e);

// Haar-distributed unitary via QR of a complex Gaussian matrix with the
// R-diagonal phase fix.
Matrix haar_unitary(int dim, Rng& rng);
std::vector<Matrix> haar_blocks(int d, Rng& rng);

}  // namespace qdistill
