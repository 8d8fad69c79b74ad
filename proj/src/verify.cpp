#include "qdistill/verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "qdistill/rng.hpp"

namespace qdistill {

namespace {

struct Residual {
    double value = 0.0;
    void track(double r) { value = std::max(value, r); }
};

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

ErrorElement random_element(int d, int copies, Rng& rng) {
    ErrorElement e = ErrorElement::zero(d, copies);
    for (int n = 0; n < copies; ++n) {
        e.k[n] = static_cast<int>(rng.next_u64() % d);
        e.l[n] = static_cast<int>(rng.next_u64() % d);
    }
    return e;
}

Matrix random_matrix(int dim, Rng& rng) {
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            m(i, j) = rng.next_complex_gaussian();
        }
    }
    return m;
}

// Residual of "a equals b up to a unimodular scalar".
double phase_aligned_residual(const Matrix& a, const Matrix& b) {
    Complex overlap = (b.adjoint() * a).trace();
    double mag = std::abs(overlap);
    Complex phase = mag > 1e-12 ? overlap / mag : Complex(1.0, 0.0);
    return max_abs(a - phase * b);
}

std::vector<ErrorElement> all_elements(int d, int copies) {
    std::vector<ErrorElement> out;
    int total = 1;
    for (int i = 0; i < 2 * copies; ++i) total *= d;
    out.reserve(total);
    for (int idx = 0; idx < total; ++idx) {
        ErrorElement e = ErrorElement::zero(d, copies);
        int rest = idx;
        for (int n = copies - 1; n >= 0; --n) {
            e.l[n] = rest % d;
            rest /= d;
        }
        for (int n = copies - 1; n >= 0; --n) {
            e.k[n] = rest % d;
            rest /= d;
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(results.begin(), results.end(),
                       [](const InvariantResult& r) { return r.pass; });
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    for (const InvariantResult& r : results) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%-4s %-58s max residual %.3e (tol %.0e)\n",
                      r.pass ? "ok" : "FAIL", r.name.c_str(), r.max_residual, r.tolerance);
        os << buf;
    }
    return os.str();
}

BdsState random_bds(int d, std::uint64_t seed) {
    Rng rng(seed);
    BdsState s;
    s.d = d;
    s.p.resize(d * d);
    double sum = 0.0;
    for (double& v : s.p) {
        v = -std::log(1.0 - rng.next_double());
        sum += v;
    }
    for (double& v : s.p) v /= sum;
    return s;
}

VerifyReport verify_algebra(const std::vector<int>& ds, std::uint64_t seed) {
    VerifyReport report;
    auto push = [&report](const std::string& name, double residual, double tol) {
        report.results.push_back({name, residual, tol, residual < tol});
    };

    for (int d : ds) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(d)));
        std::vector<ErrorElement> singles = all_elements(d, 1);

        Residual group, adj;
        for (const ErrorElement& e : singles) {
            for (const ErrorElement& f : singles) {
                PhasedWeyl prod = multiply(e, f);
                group.track(max_abs(dense_matrix(prod) - dense_matrix(e) * dense_matrix(f)));
            }
            adj.track(max_abs(dense_matrix(adjoint(e)) - dense_matrix(e).adjoint()));
        }
        for (int i = 0; i < 100; ++i) {
            ErrorElement e = random_element(d, 2, rng);
            ErrorElement f = random_element(d, 2, rng);
            PhasedWeyl prod = multiply(e, f);
            group.track(max_abs(dense_matrix(prod) - dense_matrix(e) * dense_matrix(f)));
            adj.track(max_abs(dense_matrix(adjoint(e)) - dense_matrix(e).adjoint()));
        }
        push("d=" + std::to_string(d) + " weyl group law", group.value, 1e-12);
        push("d=" + std::to_string(d) + " weyl adjoint", adj.value, 1e-12);

        Residual bilinear;
        for (const ErrorElement& g : singles) {
            for (const ErrorElement& e : singles) {
                for (const ErrorElement& f : singles) {
                    int lhs = symplectic_product(g, add(e, f));
                    int rhs = PrimeField(d).add(symplectic_product(g, e), symplectic_product(g, f));
                    bilinear.track(lhs == rhs ? 0.0 : 1.0);
                }
            }
        }
        for (int i = 0; i < 200; ++i) {
            ErrorElement g = random_element(d, 2, rng);
            ErrorElement e = random_element(d, 2, rng);
            ErrorElement f = random_element(d, 2, rng);
            int lhs = symplectic_product(g, add(e, f));
            int rhs = PrimeField(d).add(symplectic_product(g, e), symplectic_product(g, f));
            bilinear.track(lhs == rhs ? 0.0 : 1.0);
        }
        push("d=" + std::to_string(d) + " symplectic bilinearity", bilinear.value, 1e-12);

        Residual eig, ortho, act;
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                EigenSystem es = eigensystem(a, b, d);
                Matrix w = single_weyl(a, b, d);
                ortho.track(max_abs(es.vectors.adjoint() * es.vectors - Matrix::Identity(d, d)));
                for (int y = 0; y < d; ++y) {
                    Vector v = es.vectors.col(y);
                    eig.track((w * v - phase_value(es.eigenvalues[y], d) * v)
                                  .cwiseAbs()
                                  .maxCoeff());
                }
                for (int x = 0; x < d; ++x) {
                    for (int y = 0; y < d; ++y) {
                        WeylAction action = eigenvector_shift(a, b, x, y, d);
                        Matrix wxy = single_weyl(x, y, d);
                        for (int lam = 0; lam < d; ++lam) {
                            Vector expect = phase_value(action.phase_at(lam, d), d) *
                                            es.vectors.col(((lam + action.shift) % d + d) % d);
                            act.track((wxy * es.vectors.col(lam) - expect).cwiseAbs().maxCoeff());
                        }
                    }
                }
            }
        }
        push("d=" + std::to_string(d) + " eigensystem residual", eig.value, 1e-12);
        push("d=" + std::to_string(d) + " eigenbasis orthonormality", ortho.value, 1e-12);
        push("d=" + std::to_string(d) + " eigenvector action residual", act.value, 1e-12);

        // Every nontrivial two-copy generator element has d distinct
        // eigenvalues with equal multiplicity d. For d = 2 the spectrum
        // carries a fixed -(1/2) sum(k_n l_n) omega-power offset.
        Residual spectrum;
        for (int idx = 1; idx < d * d * d * d; ++idx) {
            ErrorElement g = element_from_flat(idx, d);
            std::vector<Complex> expected(d);
            for (int x = 0; x < d; ++x) {
                int units = 2 * x;
                if (d == 2) units -= g.k[0] * g.l[0] + g.k[1] * g.l[1];
                expected[x] = phase_value(phase_reduce({units}, d), d);
            }
            Eigen::ComplexEigenSolver<Matrix> solver(dense_matrix(g));
            std::vector<int> counts(d, 0);
            for (int i = 0; i < d * d; ++i) {
                Complex ev = solver.eigenvalues()(i);
                double best = 1e9;
                int best_x = 0;
                for (int x = 0; x < d; ++x) {
                    double dist = std::abs(ev - expected[x]);
                    if (dist < best) {
                        best = dist;
                        best_x = x;
                    }
                }
                spectrum.track(best);
                counts[best_x] += 1;
            }
            for (int x = 0; x < d; ++x) {
                spectrum.track(counts[x] == d ? 0.0 : 1.0);
            }
        }
        push("d=" + std::to_string(d) + " generator spectrum multiplicity", spectrum.value, 1e-9);

        Residual gram;
        std::vector<Vector> bells;
        for (const ErrorElement& e : singles) bells.push_back(bell_vector(e));
        for (std::size_t i = 0; i < bells.size(); ++i) {
            for (std::size_t j = 0; j < bells.size(); ++j) {
                Complex overlap = bells[i].dot(bells[j]);
                gram.track(std::abs(overlap - (i == j ? 1.0 : 0.0)));
            }
        }
        push("d=" + std::to_string(d) + " bell basis orthonormality", gram.value, 1e-12);

        Residual trace_identity;
        for (int copies : {1, 2}) {
            const int dim = copies == 1 ? d : d * d;
            Vector omega = bell_vector(ErrorElement::zero(d, copies));
            for (int i = 0; i < 25; ++i) {
                Matrix m = random_matrix(dim, rng);
                Matrix big = Matrix::Zero(dim * dim, dim * dim);
                for (int r = 0; r < dim; ++r) {
                    for (int c = 0; c < dim; ++c) {
                        big.block(r * dim, c * dim, dim, dim) =
                            m(r, c) * Matrix::Identity(dim, dim);
                    }
                }
                Complex lhs = omega.dot(big * omega);
                trace_identity.track(std::abs(lhs - m.trace() / static_cast<double>(dim)));
            }
        }
        push("d=" + std::to_string(d) + " max-ent trace identity", trace_identity.value, 1e-12);
    }
    return report;
}

VerifyReport verify_encodings(const std::vector<int>& ds, std::uint64_t seed) {
    VerifyReport report;
    auto push = [&report](const std::string& name, double residual, double tol) {
        report.results.push_back({name, residual, tol, residual < tol});
    };

    for (int d : ds) {
        std::vector<Stabilizer> stabilizers = enumerate_stabilizers(d);
        Residual codeword, action_label, shift_residual, linearity, coset_inv, kernel, basis,
            composed, compose_id;
        Rng enc_rng(mix_seed(seed, 1000 + static_cast<std::uint64_t>(d)));

        for (std::size_t si = 0; si < stabilizers.size(); ++si) {
            const Stabilizer& stab = stabilizers[si];
            Encoding enc = canonic_encoding(stab);

            for (int x = 0; x < d; ++x) {
                Complex mu = phase_value(generator_eigenvalue(stab, x), d);
                Matrix wg = dense_matrix(stab.generator);
                for (int k = 0; k < d; ++k) {
                    Vector col = enc.u.col(x * d + k);
                    codeword.track((wg * col - mu * col).cwiseAbs().maxCoeff());
                }
            }

            // Analytic coset action vs the dense conjugation, every coset.
            for (int s = 0; s < d; ++s) {
                std::vector<Coset> cosets = cosets_in(stab, s);
                for (const Coset& coset : cosets) {
                    ActionOperator op = coset_action(stab, coset);
                    for (const ErrorElement& member : coset.members) {
                        ActionOperator mop = error_action(stab, member);
                        action_label.track(mop.label == op.label ? 0.0 : 1.0);
                    }
                    BlockDecomposition dec = conjugate_error(enc, coset.representative);
                    action_label.track(dec.syndrome == coset.syndrome ? 0.0 : 1.0);
                    Matrix wlabel = dense_matrix(op.label);
                    for (int lam = 0; lam < d; ++lam) {
                        Matrix expect =
                            phase_value(op.phase_at(lam, d), d) * wlabel;
                        action_label.track(
                            max_abs(dec.blocks[(lam + s) % d] - expect));
                    }
                }

                // Basis property: the coset-action images of the maximally
                // entangled state are orthonormal up to phase.
                std::vector<Coset> class_cosets = cosets_in(stab, s);
                std::vector<Vector> states;
                Vector omega = bell_vector(ErrorElement::zero(d, 1));
                for (const Coset& coset : class_cosets) {
                    BlockDecomposition dec = conjugate_error(enc, coset.representative);
                    const Matrix& t = dec.blocks[s % d];
                    Matrix big = Matrix::Zero(d * d, d * d);
                    for (int r = 0; r < d; ++r)
                        for (int c = 0; c < d; ++c)
                            big.block(r * d, c * d, d, d) = t(r, c) * Matrix::Identity(d, d);
                    states.push_back(big * omega);
                }
                for (std::size_t i = 0; i < states.size(); ++i) {
                    for (std::size_t j = 0; j < states.size(); ++j) {
                        double overlap = std::abs(states[i].dot(states[j]));
                        basis.track(std::abs(overlap - (i == j ? 1.0 : 0.0)));
                    }
                }
            }

            // Kernel: within E(0) the trivial action label lands exactly on
            // the stabilizer coset; per class the label map is a bijection.
            for (const Coset& coset : cosets_in(stab, 0)) {
                bool is_stab = coset.representative.is_zero();
                bool trivial = coset_action(stab, coset).label.is_zero();
                kernel.track(is_stab == trivial ? 0.0 : 1.0);
            }
            for (int s = 0; s < d; ++s) {
                std::set<int> labels;
                for (const Coset& coset : cosets_in(stab, s)) {
                    const ErrorElement& label = coset_action(stab, coset).label;
                    labels.insert(label.l[0] * d + label.k[0]);
                }
                kernel.track(static_cast<int>(labels.size()) == d * d ? 0.0 : 1.0);
            }

            Rng rng(mix_seed(seed, 7000 + si));
            for (int rep = 0; rep < 8; ++rep) {
                ErrorElement e = random_element(d, 2, rng);
                ErrorElement f = random_element(d, 2, rng);

                // Syndrome shift: W(e) maps Q(x) into Q(x + <g,e>).
                int s = symplectic_product(stab.generator, e);
                Matrix we = dense_matrix(e);
                for (int x = 0; x < d; ++x) {
                    Matrix proj = Matrix::Zero(d * d, d * d);
                    int target = (x + s) % d;
                    for (int k = 0; k < d; ++k) {
                        proj.noalias() += enc.u.col(target * d + k) *
                                          enc.u.col(target * d + k).adjoint();
                    }
                    Vector moved = we * enc.u.col(x * d + rep % d);
                    shift_residual.track((moved - proj * moved).cwiseAbs().maxCoeff());
                }

                // Linearity of actions: blocks of e+f match shifted products
                // up to a phase.
                int se = symplectic_product(stab.generator, e);
                BlockDecomposition de = conjugate_error(enc, e);
                BlockDecomposition df = conjugate_error(enc, f);
                BlockDecomposition dsum = conjugate_error(enc, add(e, f));
                for (int x = 0; x < d; ++x) {
                    int xf = (x + symplectic_product(stab.generator, f)) % d;
                    int xef = (xf + se) % d;
                    Matrix prod = de.blocks[xef] * df.blocks[xf];
                    linearity.track(phase_aligned_residual(dsum.blocks[xef], prod));
                }

                // Coset invariance: adding a generator multiple changes blocks
                // only by a unimodular scalar.
                BlockDecomposition dshift =
                    conjugate_error(enc, add(e, stab.members[1 + rep % (d - 1)]));
                for (int x = 0; x < d; ++x) {
                    coset_inv.track(
                        phase_aligned_residual(dshift.blocks[x], de.blocks[x]));
                }
            }

            // Composed encodings: codeword property and the block transform.
            std::vector<Matrix> blocks = haar_blocks(d, enc_rng);
            Encoding comp = compose_encoding(enc, blocks);
            Matrix wg = dense_matrix(stab.generator);
            for (int x = 0; x < d; ++x) {
                Complex mu = phase_value(generator_eigenvalue(stab, x), d);
                for (int k = 0; k < d; ++k) {
                    Vector col = comp.u.col(x * d + k);
                    codeword.track((wg * col - mu * col).cwiseAbs().maxCoeff());
                }
            }
            ErrorElement probe = random_element(d, 2, enc_rng);
            int sp = symplectic_product(stab.generator, probe);
            BlockDecomposition base_dec = conjugate_error(enc, probe);
            BlockDecomposition comp_dec = conjugate_error(comp, probe);
            for (int x = 0; x < d; ++x) {
                int target = (x + sp) % d;
                Matrix expect = blocks[target].adjoint() * base_dec.blocks[target] * blocks[x];
                composed.track(max_abs(comp_dec.blocks[target] - expect));
            }

            std::vector<Matrix> identity_blocks(d, Matrix::Identity(d, d));
            compose_id.track(max_abs(compose_encoding(enc, identity_blocks).u - enc.u));
        }

        std::string p = "d=" + std::to_string(d) + " ";
        push(p + "codeword property", codeword.value, 1e-12);
        push(p + "coset action vs dense conjugation", action_label.value, 1e-10);
        push(p + "syndrome shift of codewords", shift_residual.value, 1e-10);
        push(p + "action linearity", linearity.value, 1e-10);
        push(p + "coset invariance of actions", coset_inv.value, 1e-10);
        push(p + "kernel property", kernel.value, 1e-12);
        push(p + "coset action basis property", basis.value, 1e-10);
        push(p + "composed encoding block transform", composed.value, 1e-10);
        push(p + "identity composition", compose_id.value, 1e-12);
    }
    return report;
}

VerifyReport verify_oracle(const std::vector<int>& ds, std::uint64_t seed, int states_per_d,
                           Exec exec) {
    VerifyReport report;
    for (int d : ds) {
        std::vector<Stabilizer> stabilizers = enumerate_stabilizers(d);
        std::vector<BdsState> states;
        std::vector<Matrix> dense_inputs;
        for (int i = 0; i < states_per_d; ++i) {
            states.push_back(random_bds(d, mix_seed(seed, 40000 + i + 1000 * d)));
            dense_inputs.push_back(two_copy_dense(states.back()));
        }

        const int n = static_cast<int>(stabilizers.size());
        std::vector<double> equiv(n, 0.0), diag(n, 0.0), prob_res(n, 0.0);

#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
        for (int si = 0; si < n; ++si) {
            const Stabilizer& stab = stabilizers[si];
            Encoding enc = canonic_encoding(stab);
            Coset stab_coset = coset_of(stab, ErrorElement::zero(d, 2));
            std::vector<Vector> bells;
            for (int l = 0; l < d; ++l)
                for (int k = 0; k < d; ++k)
                    bells.push_back(bell_vector(ErrorElement{d, {k}, {l}}));

            for (int i = 0; i < states_per_d; ++i) {
                ErrorDistribution dist = two_copy_distribution(states[i]);
                double prob_total = 0.0;
                for (int a = 0; a < d; ++a) {
                    for (int b = 0; b < d; ++b) {
                        int s = ((a - b) % d + d) % d;
                        OracleResult res =
                            standard_form_oracle(dense_inputs[i], stab, enc, a, b);
                        prob_total += res.probability;
                        prob_res[si] = std::max(
                            prob_res[si],
                            std::abs(res.probability -
                                     class_probability(dist, stab, s) / d));

                        auto [fast, class_prob] =
                            generic_step(states[i], stab, s, stab_coset);
                        (void)class_prob;
                        for (int idx = 0; idx < d * d; ++idx) {
                            int k = idx % d, l = idx / d;
                            double q = std::real(
                                bells[l * d + k].dot(res.state * bells[l * d + k]));
                            equiv[si] = std::max(equiv[si], std::abs(q - fast.p[idx]));
                        }
                        for (int r = 0; r < d * d; ++r) {
                            for (int c = 0; c < d * d; ++c) {
                                if (r == c) continue;
                                Complex off = bells[r].dot(res.state * bells[c]);
                                diag[si] = std::max(diag[si], std::abs(off));
                            }
                        }
                    }
                }
                prob_res[si] = std::max(prob_res[si], std::abs(prob_total - 1.0));
            }
        }

        auto fold = [](const std::vector<double>& v) {
            return *std::max_element(v.begin(), v.end());
        };
        std::string p = "d=" + std::to_string(d) + " ";
        report.results.push_back(
            {p + "oracle vs fast path", fold(equiv), 1e-9, fold(equiv) < 1e-9});
        report.results.push_back(
            {p + "oracle output Bell-diagonal", fold(diag), 1e-9, fold(diag) < 1e-9});
        report.results.push_back(
            {p + "outcome probabilities", fold(prob_res), 1e-9, fold(prob_res) < 1e-9});
    }
    return report;
}

VerifyReport verify_maximality(const std::vector<int>& ds, std::uint64_t seed, int states_per_d,
                               int encodings_per_stab, Exec exec) {
    VerifyReport report;
    for (int d : ds) {
        std::vector<Stabilizer> stabilizers = enumerate_stabilizers(d);
        const int n = static_cast<int>(stabilizers.size());

        std::vector<BdsState> states;
        std::vector<ErrorDistribution> dists;
        std::vector<double> fimax_predicted;
        for (int i = 0; i < states_per_d; ++i) {
            states.push_back(random_bds(d, mix_seed(seed, 90000 + i + 1000 * d)));
            dists.push_back(two_copy_distribution(states.back()));
            fimax_predicted.push_back(fimax_select(states.back(), Exec::serial).predicted_fidelity);
        }

        std::vector<double> per_coset_norm(n, 0.0), per_label_norm(n, 0.0), excess(n, -1.0);

#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
        for (int si = 0; si < n; ++si) {
            const Stabilizer& stab = stabilizers[si];
            Encoding canonic = canonic_encoding(stab);
            std::vector<Encoding> encodings{canonic};
            for (int ei = 0; ei < encodings_per_stab; ++ei) {
                Rng rng(mix_seed(seed, 50000 + 1000ULL * si + ei));
                encodings.push_back(compose_encoding(canonic, haar_blocks(d, rng)));
            }

            std::vector<std::vector<Coset>> class_cosets(d);
            for (int s = 0; s < d; ++s) class_cosets[s] = cosets_in(stab, s);

            // f tables: f[enc][s][coset][label]
            for (const Encoding& enc : encodings) {
                std::vector<std::vector<std::vector<double>>> f(d);
                for (int s = 0; s < d; ++s) {
                    f[s].resize(class_cosets[s].size());
                    for (std::size_t ci = 0; ci < class_cosets[s].size(); ++ci) {
                        f[s][ci].resize(d * d);
                        double row_sum = 0.0;
                        for (int l = 0; l < d; ++l) {
                            for (int k = 0; k < d; ++k) {
                                double v =
                                    coset_fidelity(stab, enc, class_cosets[s][ci], k, l);
                                f[s][ci][l * d + k] = v;
                                row_sum += v;
                            }
                        }
                        per_coset_norm[si] =
                            std::max(per_coset_norm[si], std::abs(row_sum - 1.0));
                    }
                    for (int lab = 0; lab < d * d; ++lab) {
                        double col_sum = 0.0;
                        for (std::size_t ci = 0; ci < class_cosets[s].size(); ++ci) {
                            col_sum += f[s][ci][lab];
                        }
                        per_label_norm[si] =
                            std::max(per_label_norm[si], std::abs(col_sum - 1.0));
                    }
                }

                for (int i = 0; i < states_per_d; ++i) {
                    for (int s = 0; s < d; ++s) {
                        double class_prob = class_probability(dists[i], stab, s);
                        if (class_prob <= 1e-15) continue;
                        std::vector<double> ratios(class_cosets[s].size());
                        for (std::size_t ci = 0; ci < class_cosets[s].size(); ++ci) {
                            ratios[ci] =
                                coset_probability(dists[i], class_cosets[s][ci]) / class_prob;
                        }
                        for (int lab = 0; lab < d * d; ++lab) {
                            double fid = 0.0;
                            for (std::size_t ci = 0; ci < class_cosets[s].size(); ++ci) {
                                fid += ratios[ci] * f[s][ci][lab];
                            }
                            excess[si] = std::max(excess[si], fid - fimax_predicted[i]);
                        }
                    }
                }
            }
        }

        auto fold = [](const std::vector<double>& v) {
            return *std::max_element(v.begin(), v.end());
        };
        std::string p = "d=" + std::to_string(d) + " ";
        double coset_norm = fold(per_coset_norm), label_norm = fold(per_label_norm);
        double max_excess = fold(excess);
        report.results.push_back({p + "coset fidelity sums to 1 per coset", coset_norm, 1e-9,
                                  coset_norm < 1e-9});
        report.results.push_back({p + "coset fidelity sums to 1 per label", label_norm, 1e-9,
                                  label_norm < 1e-9});
        report.results.push_back({p + "no encoding beats the selected ratio", max_excess, 1e-9,
                                  max_excess < 1e-9});
    }
    return report;
}

}  // namespace qdistill
