#include "qdistill/states.hpp"

#include <fstream>
#include <numeric>

#include "qdistill/rng.hpp"

namespace qdistill {

namespace {

constexpr double kProbTol = 1e-9;

void require_normalized(const BdsState& state) {
    if (std::abs(state.total() - 1.0) > kProbTol) {
        throw InvalidMixture("Bell probabilities do not sum to 1");
    }
}

}  // namespace

BdsState BdsState::pure(int d, int k, int l) {
    BdsState s;
    s.d = d;
    s.p.assign(d * d, 0.0);
    s.p[l * d + k] = 1.0;
    return s;
}

double BdsState::total() const {
    return std::accumulate(p.begin(), p.end(), 0.0);
}

double fidelity(const BdsState& state, int k, int l) {
    return state.fidelity(k, l);
}

double fidelity(const DenseState& state, int k, int l) {
    ErrorElement e{state.d, {k}, {l}};
    Vector omega = bell_vector(e);
    return std::real(omega.dot(state.rho * omega));
}

BdsState weyl_twirl(const DenseState& state) {
    BdsState out;
    out.d = state.d;
    out.p.resize(state.d * state.d);
    for (int l = 0; l < state.d; ++l) {
        for (int k = 0; k < state.d; ++k) {
            out.p[l * state.d + k] = fidelity(state, k, l);
        }
    }
    return out;
}

BdsState isotropic_state(int d, double p) {
    PrimeField field(d);
    BdsState out;
    out.d = d;
    double background = (1.0 - p) / (d * d);
    if (background < 0.0 || p + background < 0.0) {
        throw InvalidMixture("isotropic mixture has negative Bell probabilities");
    }
    out.p.assign(d * d, background);
    out.p[0] += p;
    return out;
}

BdsState offline_state(double p) {
    if (p < 0.0 || p > 1.0) {
        throw InvalidMixture("off-line mixing parameter must lie in [0, 1]");
    }
    const int d = 3;
    BdsState out;
    out.d = d;
    out.p.assign(d * d, (1.0 - p) / 9.0);
    out.p[0 * d + 0] += p / 3.0;  // Omega_00
    out.p[0 * d + 1] += p / 3.0;  // Omega_10
    out.p[1 * d + 0] += p / 3.0;  // Omega_01
    return out;
}

DenseState random_pure_state(int d, std::uint64_t seed) {
    Rng rng(seed);
    Vector psi(d * d);
    for (int i = 0; i < d * d; ++i) {
        psi(i) = rng.next_complex_gaussian();
    }
    psi.normalize();
    DenseState out;
    out.d = d;
    out.rho = psi * psi.adjoint();
    return out;
}

ErrorDistribution two_copy_distribution(const BdsState& state) {
    require_normalized(state);
    const int d = state.d;
    ErrorDistribution dist;
    dist.d = d;
    dist.p.resize(d * d * d * d);
    for (int k1 = 0; k1 < d; ++k1) {
        for (int k2 = 0; k2 < d; ++k2) {
            for (int l1 = 0; l1 < d; ++l1) {
                for (int l2 = 0; l2 < d; ++l2) {
                    int idx = ((k1 * d + k2) * d + l1) * d + l2;
                    dist.p[idx] = state.p[l1 * d + k1] * state.p[l2 * d + k2];
                }
            }
        }
    }
    return dist;
}

nlohmann::json to_json(const BdsState& state) {
    return {{"d", state.d}, {"kind", "bds"}, {"bell_probs", state.p}};
}

nlohmann::json to_json(const DenseState& state) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < state.rho.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < state.rho.cols(); ++j) {
            row.push_back({state.rho(i, j).real(), state.rho(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return {{"d", state.d}, {"kind", "dense"}, {"matrix", std::move(rows)}};
}

AnyState state_from_json(const nlohmann::json& j) {
    int d = j.at("d").get<int>();
    if (!is_prime(d)) {
        throw NotPrime("state dimension must be prime");
    }
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "bds") {
        BdsState s;
        s.d = d;
        s.p = j.at("bell_probs").get<std::vector<double>>();
        if (static_cast<int>(s.p.size()) != d * d) {
            throw InvalidMixture("bell_probs must have d^2 entries");
        }
        require_normalized(s);
        return s;
    }
    if (kind == "dense") {
        const auto& rows = j.at("matrix");
        const int dim = d * d;
        if (static_cast<int>(rows.size()) != dim) {
            throw InvalidMixture("matrix must be d^2 x d^2");
        }
        DenseState s;
        s.d = d;
        s.rho.resize(dim, dim);
        for (int i = 0; i < dim; ++i) {
            if (static_cast<int>(rows[i].size()) != dim) {
                throw InvalidMixture("matrix must be d^2 x d^2");
            }
            for (int jj = 0; jj < dim; ++jj) {
                s.rho(i, jj) = Complex(rows[i][jj][0].get<double>(), rows[i][jj][1].get<double>());
            }
        }
        if ((s.rho - s.rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10 ||
            std::abs(std::real(s.rho.trace()) - 1.0) > 1e-10) {
            throw InvalidMixture("dense state must be Hermitian with unit trace");
        }
        return s;
    }
    throw InvalidMixture("unknown state kind: " + kind);
}

AnyState load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidMixture("cannot open state file: " + path);
    }
    nlohmann::json j;
    in >> j;
    return state_from_json(j);
}

void save_state(const AnyState& state, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidMixture("cannot write state file: " + path);
    }
    std::visit([&out](const auto& s) { out << to_json(s).dump(2) << "\n"; }, state);
}

}  // namespace qdistill
