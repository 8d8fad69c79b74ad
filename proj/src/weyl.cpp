#include "qdistill/weyl.hpp"

#include <algorithm>

namespace qdistill {

namespace {

void require_compatible(const ErrorElement& a, const ErrorElement& b) {
    if (a.d != b.d || a.copies() != b.copies()) {
        throw DimensionMismatch("error elements must share d and copy count");
    }
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

bool ErrorElement::is_zero() const {
    auto nz = [](int v) { return v != 0; };
    return std::none_of(k.begin(), k.end(), nz) && std::none_of(l.begin(), l.end(), nz);
}

bool operator==(const ErrorElement& a, const ErrorElement& b) {
    return a.d == b.d && a.k == b.k && a.l == b.l;
}

bool operator<(const ErrorElement& a, const ErrorElement& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.l < b.l;
}

ErrorElement add(const ErrorElement& a, const ErrorElement& b) {
    require_compatible(a, b);
    ErrorElement out = a;
    for (int n = 0; n < a.copies(); ++n) {
        out.k[n] = (a.k[n] + b.k[n]) % a.d;
        out.l[n] = (a.l[n] + b.l[n]) % a.d;
    }
    return out;
}

ErrorElement sub(const ErrorElement& a, const ErrorElement& b) {
    return add(a, negate(b));
}

ErrorElement negate(const ErrorElement& a) {
    ErrorElement out = a;
    for (int n = 0; n < a.copies(); ++n) {
        out.k[n] = (a.d - a.k[n]) % a.d;
        out.l[n] = (a.d - a.l[n]) % a.d;
    }
    return out;
}

ErrorElement scale(int m, const ErrorElement& a) {
    ErrorElement out = a;
    int mm = ((m % a.d) + a.d) % a.d;
    for (int n = 0; n < a.copies(); ++n) {
        out.k[n] = a.k[n] * mm % a.d;
        out.l[n] = a.l[n] * mm % a.d;
    }
    return out;
}

PhasedWeyl multiply(const ErrorElement& e, const ErrorElement& f) {
    require_compatible(e, f);
    int w = 0;
    for (int n = 0; n < e.copies(); ++n) {
        w += e.l[n] * f.k[n];
    }
    return {omega_power(w, e.d), add(e, f)};
}

PhasedWeyl adjoint(const ErrorElement& e) {
    int w = 0;
    for (int n = 0; n < e.copies(); ++n) {
        w += e.k[n] * e.l[n];
    }
    return {omega_power(w, e.d), negate(e)};
}

int symplectic_product(const ErrorElement& e, const ErrorElement& f) {
    require_compatible(e, f);
    long long s = 0;
    for (int n = 0; n < e.copies(); ++n) {
        s += static_cast<long long>(e.l[n]) * f.k[n] - static_cast<long long>(e.k[n]) * f.l[n];
    }
    return PrimeField(e.d).reduce(s);
}

Matrix single_weyl(int k, int l, int d) {
    Matrix w = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        w(j, (j + l) % d) = phase_value(omega_power(j * k, d), d);
    }
    return w;
}

Matrix dense_matrix(const ErrorElement& e) {
    Matrix out = single_weyl(e.k[0], e.l[0], e.d);
    for (int n = 1; n < e.copies(); ++n) {
        out = kron(out, single_weyl(e.k[n], e.l[n], e.d));
    }
    return out;
}

Matrix dense_matrix(const PhasedWeyl& w) {
    return phase_value(w.phase, w.element.d) * dense_matrix(w.element);
}

Vector bell_vector(const ErrorElement& e) {
    // (W(e) (x) 1) sum_I |I>|I> / sqrt(D): component (J, I) is W(e)_{J,I} / sqrt(D).
    Matrix w = dense_matrix(e);
    const Eigen::Index dim = w.rows();
    Vector v(dim * dim);
    double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Eigen::Index ja = 0; ja < dim; ++ja) {
        for (Eigen::Index jb = 0; jb < dim; ++jb) {
            v(ja * dim + jb) = w(ja, jb) * norm;
        }
    }
    return v;
}

EigenSystem eigensystem(int a, int b, int d) {
    PrimeField f(d);
    a = f.reduce(a);
    b = f.reduce(b);
    EigenSystem es;
    es.d = d;
    es.a = a;
    es.b = b;
    es.eigenvalues.resize(d);
    es.vectors = Matrix::Zero(d, d);

    if (a == 0 && b == 0) {
        for (int y = 0; y < d; ++y) {
            es.eigenvalues[y] = {0};
            es.vectors(y, y) = 1.0;
        }
        return es;
    }
    if (b == 0) {
        int ainv = f.inverse(a);
        for (int y = 0; y < d; ++y) {
            es.eigenvalues[y] = omega_power(y, d);
            es.vectors(f.mul(y, ainv), y) = 1.0;
        }
        return es;
    }
    if (d == 2) {
        // tau = i here; eigenvalues tau^{2y - ab} include the half-integer
        // omega powers when ab = 1.
        double norm = 1.0 / std::sqrt(2.0);
        for (int y = 0; y < 2; ++y) {
            es.eigenvalues[y] = phase_reduce({2 * y - a * b}, d);
            es.vectors(0, y) = norm;
            es.vectors(1, y) = phase_value(es.eigenvalues[y], d) * norm;
        }
        return es;
    }
    int binv = f.inverse(b);
    double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int y = 0; y < d; ++y) {
        es.eigenvalues[y] = omega_power(y, d);
        for (int j = 0; j < d; ++j) {
            // m(m-1) is even for the canonical representative m, so the half
            // in the quadratic term is exact integer division.
            int m = f.mul(j, binv);
            long long gamma = static_cast<long long>(m) * y -
                              static_cast<long long>(m) * (m - 1) / 2 * a * b;
            es.vectors(j, y) = phase_value(omega_power(f.reduce(gamma), d), d) * norm;
        }
    }
    return es;
}

WeylAction eigenvector_shift(int a, int b, int x, int y, int d) {
    PrimeField f(d);
    a = f.reduce(a);
    b = f.reduce(b);
    x = f.reduce(x);
    y = f.reduce(y);
    WeylAction act;
    if (a == 0 && b == 0) {
        act.shift = f.neg(y);
        act.slope = 2 * x;
        act.offset = -2 * x * y;
    } else if (b == 0) {
        int ainv = f.inverse(a);
        act.shift = f.reduce(-static_cast<long long>(a) * y);
        act.slope = 2 * f.mul(x, ainv);
        act.offset = -2 * x * y;
    } else if (d == 2) {
        act.shift = f.reduce(b * x - a * y);
        act.slope = 2 * y;
        act.offset = -a * b * y;
    } else {
        int binv = f.inverse(b);
        int u = f.mul(y, binv);
        act.shift = f.reduce(static_cast<long long>(b) * x - static_cast<long long>(a) * y);
        act.slope = 2 * u;
        act.offset = -2 * f.mul(f.mul(f.half(), f.mul(a, y)), f.sub(u, 1));
    }
    act.slope = phase_reduce({act.slope}, d).units;
    act.offset = phase_reduce({act.offset}, d).units;
    return act;
}

}  // namespace qdistill
