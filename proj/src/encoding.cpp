#include "qdistill/encoding.hpp"

#include <Eigen/QR>

namespace qdistill {

namespace {

constexpr double kUnitaryTol = 1e-12;
constexpr double kBlockUnitaryTol = 1e-10;
constexpr double kStructureTol = 1e-8;

bool nontrivial_factor(const Stabilizer& stab, int n) {
    return stab.generator.k[n] != 0 || stab.generator.l[n] != 0;
}

double unitarity_residual(const Matrix& m) {
    return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

PhaseExponent generator_eigenvalue(const Stabilizer& stab, int x) {
    int units = 2 * x;
    if (stab.d == 2) {
        for (int n = 0; n < 2; ++n) {
            units -= stab.generator.k[n] * stab.generator.l[n];
        }
    }
    return phase_reduce({units}, stab.d);
}

Encoding canonic_encoding(const Stabilizer& stab) {
    const int d = stab.d;
    if (stab.generator.is_zero()) {
        throw InvalidGenerator("canonic encoding requires a nontrivial generator");
    }
    const bool first = nontrivial_factor(stab, 0);
    const bool second = nontrivial_factor(stab, 1);
    EigenSystem es1 = eigensystem(stab.generator.k[0], stab.generator.l[0], d);
    EigenSystem es2 = eigensystem(stab.generator.k[1], stab.generator.l[1], d);

    Encoding enc;
    enc.stabilizer = stab;
    enc.kind = EncodingKind::canonic;
    enc.u = Matrix::Zero(d * d, d * d);
    for (int x = 0; x < d; ++x) {
        for (int k = 0; k < d; ++k) {
            Vector f1, f2;
            if (first && second) {
                f1 = es1.vectors.col(k);
                f2 = es2.vectors.col(((x - k) % d + d) % d);
            } else if (first) {
                f1 = es1.vectors.col(x);
                f2 = es2.vectors.col(k);  // computational |k>
            } else {
                f1 = es1.vectors.col(k);  // computational |k>
                f2 = es2.vectors.col(x);
            }
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    enc.u(i * d + j, x * d + k) = f1(i) * f2(j);
                }
            }
        }
    }
    return enc;
}

Encoding compose_encoding(const Encoding& base, const std::vector<Matrix>& blocks) {
    const int d = base.stabilizer.d;
    if (static_cast<int>(blocks.size()) != d) {
        throw InvalidBlock("expected one block per codespace");
    }
    Matrix blockdiag = Matrix::Zero(d * d, d * d);
    for (int x = 0; x < d; ++x) {
        const Matrix& y = blocks[x];
        if (y.rows() != d || y.cols() != d || unitarity_residual(y) > kUnitaryTol) {
            throw InvalidBlock("codespace block is not unitary");
        }
        blockdiag.block(x * d, x * d, d, d) = y;
    }
    Encoding enc;
    enc.stabilizer = base.stabilizer;
    enc.kind = EncodingKind::composed;
    enc.u = base.u * blockdiag;
    return enc;
}

ActionOperator error_action(const Stabilizer& stab, const ErrorElement& e) {
    const int d = stab.d;
    if (e.copies() != 2 || e.d != d) {
        throw DimensionMismatch("error element does not match the stabilizer");
    }
    const bool first = nontrivial_factor(stab, 0);
    const bool second = nontrivial_factor(stab, 1);
    WeylAction a1 = eigenvector_shift(stab.generator.k[0], stab.generator.l[0], e.k[0], e.l[0], d);
    WeylAction a2 = eigenvector_shift(stab.generator.k[1], stab.generator.l[1], e.k[1], e.l[1], d);

    // The kept register carries factor 1 in case (i) and the trivial factor in
    // case (ii); t comes from the register's phase slope, sigma from its label
    // shift, and the remaining slope is the per-codespace phase.
    int t, sigma, lambda_slope;
    if (first && second) {
        t = PrimeField(d).reduce((a1.slope - a2.slope) / 2 + d);
        sigma = a1.shift;
        lambda_slope = a2.slope;
    } else if (first) {
        t = e.k[1];
        sigma = a2.shift;
        lambda_slope = a1.slope;
    } else {
        t = e.k[0];
        sigma = a1.shift;
        lambda_slope = a2.slope;
    }

    ActionOperator op;
    op.label = ErrorElement{d, {t}, {PrimeField(d).reduce(-sigma)}};
    op.lambda_slope = phase_reduce({lambda_slope}, d).units;
    op.lambda_offset = phase_reduce({a1.offset + a2.offset - 2 * t * sigma}, d).units;
    return op;
}

ActionOperator coset_action(const Stabilizer& stab, const Coset& coset) {
    return error_action(stab, coset.representative);
}

BlockDecomposition conjugate_error(const Encoding& enc, const ErrorElement& e) {
    const int d = enc.stabilizer.d;
    Matrix m = enc.u.adjoint() * dense_matrix(e) * enc.u;
    BlockDecomposition out;
    out.syndrome = symplectic_product(enc.stabilizer.generator, e);
    out.blocks.resize(d);
    double off_pattern = 0.0;
    for (int src = 0; src < d; ++src) {
        for (int dst = 0; dst < d; ++dst) {
            Matrix block = m.block(dst * d, src * d, d, d);
            if (dst == (src + out.syndrome) % d) {
                if (unitarity_residual(block) > kBlockUnitaryTol) {
                    throw StructureViolation("codespace block is not unitary");
                }
                out.blocks[dst] = std::move(block);
            } else {
                off_pattern = std::max(off_pattern, block.cwiseAbs().maxCoeff());
            }
        }
    }
    if (off_pattern > kStructureTol) {
        throw StructureViolation("operator does not shift codespaces uniformly");
    }
    return out;
}

Matrix haar_unitary(int dim, Rng& rng) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = rng.next_complex_gaussian();
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        Complex rii = r(i, i);
        double mag = std::abs(rii);
        q.col(i) *= (mag > 0.0 ? rii / mag : Complex(1.0, 0.0));
    }
    return q;
}

std::vector<Matrix> haar_blocks(int d, Rng& rng) {
    std::vector<Matrix> blocks;
    blocks.reserve(d);
    for (int x = 0; x < d; ++x) {
        blocks.push_back(haar_unitary(d, rng));
    }
    return blocks;
}

}  // namespace qdistill
