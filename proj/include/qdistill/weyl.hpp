#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qdistill/field.hpp"

namespace qdistill {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Label (k_vec, l_vec) of a Weyl-Heisenberg error on N qudit copies of
// dimension d:
//
//     W(e) = W_{k_1,l_1} (x) ... (x) W_{k_N,l_N},
//     W_{k,l} = sum_j omega^{jk} |j><j+l|,   omega = exp(2*pi*i/d).
//
// Elements form an additive group mod d; products of the operators pick up
// exact omega phases tracked by PhasedWeyl.
struct ErrorElement {
    int d = 2;
    std::vector<int> k, l;

    static ErrorElement zero(int d, int copies) {
        return {d, std::vector<int>(copies, 0), std::vector<int>(copies, 0)};
    }
    int copies() const { return static_cast<int>(k.size()); }
    bool is_zero() const;
};

bool operator==(const ErrorElement& a, const ErrorElement& b);
inline bool operator!=(const ErrorElement& a, const ErrorElement& b) { return !(a == b); }
// Lexicographic on the flattened tuple (k_1,...,k_N, l_1,...,l_N).
bool operator<(const ErrorElement& a, const ErrorElement& b);

ErrorElement add(const ErrorElement& a, const ErrorElement& b);
ErrorElement sub(const ErrorElement& a, const ErrorElement& b);
ErrorElement negate(const ErrorElement& a);
ErrorElement scale(int m, const ErrorElement& a);

// A Weyl operator with its exact scalar prefactor: tau^{phase} * W(element).
struct PhasedWeyl {
    PhaseExponent phase;
    ErrorElement element;
};

// W(e) W(f) = omega^{l(e).k(f)} W(e+f).
PhasedWeyl multiply(const ErrorElement& e, const ErrorElement& f);
// W(e)^dagger = omega^{k(e).l(e)} W(-e).
PhasedWeyl adjoint(const ErrorElement& e);

// <e, f> = sum_i l_i(e) k_i(f) - k_i(e) l_i(f)  (mod d). The first slot plays
// the generator role: <g, e> is the syndrome of e w.r.t. g.
int symplectic_product(const ErrorElement& e, const ErrorElement& f);

Matrix single_weyl(int k, int l, int d);
Matrix dense_matrix(const ErrorElement& e);
Matrix dense_matrix(const PhasedWeyl& w);

// Bell vector |Omega(e)> = (W(e) (x) 1) |Omega_00>^{(x)N} with all of Alice's
// qudits first (A_1..A_N B_1..B_N ordering); dimension d^{2N}.
Vector bell_vector(const ErrorElement& e);

// Single-qudit eigensystem of W_{a,b}. Three regular cases plus the special
// d = 2, b != 0 one:
//   a=b=0:        eigenvalue 1,        |omega_y> = |y>
//   a!=0, b=0:    eigenvalue omega^y,  |omega_y> = |y a^{-1}>
//   b!=0, d>2:    eigenvalue omega^y,  |omega_y> = d^{-1/2} sum_j omega^{G(y,j)} |j>,
//                 G(y,j) = j b^{-1} y - (j b^{-1})(j b^{-1} - 1)/2 * a b
//   b!=0, d=2:    eigenvalue tau^{2y-ab}, |omega_y> = (|0> + tau^{2y-ab} |1>)/sqrt(2)
struct EigenSystem {
    int d = 2;
    int a = 0, b = 0;
    std::vector<PhaseExponent> eigenvalues;  // indexed by the label y
    Matrix vectors;                          // column y = |omega_y>
};

EigenSystem eigensystem(int a, int b, int d);

// Action of W_{x,y} on the eigenbasis of W_{a,b}:
//     W_{x,y} |omega_y> = tau^{slope*y + offset} |omega_{y + shift}>.
// slope is always even (an omega power); offset can be odd for d = 2.
struct WeylAction {
    int shift = 0;
    int slope = 0;
    int offset = 0;

    PhaseExponent phase_at(int label, int d) const {
        return phase_reduce({slope * label + offset}, d);
    }
};

WeylAction eigenvector_shift(int a, int b, int x, int y, int d);

}  // namespace qdistill
