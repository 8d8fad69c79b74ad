#pragma once

#include <complex>

#include "qdistill/errors.hpp"

namespace qdistill {

bool is_prime(int n);

// Arithmetic context for the prime field Z_d. Element values are plain ints
// kept in [0, d); the context reduces and inverts. Primality is checked once
// at construction, so every nonzero element is invertible.
class PrimeField {
public:
    explicit PrimeField(int d);

    int d() const { return d_; }

    // Canonical representative in [0, d) for any integer.
    int reduce(long long x) const {
        long long r = x % d_;
        return static_cast<int>(r < 0 ? r + d_ : r);
    }

    int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
    int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
    int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
    int neg(int a) const { return reduce(-static_cast<long long>(a)); }

    // Multiplicative inverse; throws NoInverse for a == 0 (mod d).
    int inverse(int a) const;

    // 2^{-1} mod d. Only defined for odd d.
    int half() const;

private:
    int d_;
};

// Integer power of tau = exp(i*pi/d), stored modulo 2d. Even exponents are
// the powers of omega = exp(2*pi*i/d); odd exponents occur only for d = 2,
// where half-integer omega powers (i.e. +-i) appear.
struct PhaseExponent {
    int units = 0;
};

inline PhaseExponent phase_reduce(PhaseExponent p, int d) {
    int m = 2 * d;
    int r = p.units % m;
    return {r < 0 ? r + m : r};
}

inline PhaseExponent phase_add(PhaseExponent a, PhaseExponent b, int d) {
    return phase_reduce({a.units + b.units}, d);
}

inline PhaseExponent phase_negate(PhaseExponent a, int d) {
    return phase_reduce({-a.units}, d);
}

// omega^k as a phase exponent: tau^{2k}.
inline PhaseExponent omega_power(int k, int d) {
    return phase_reduce({2 * k}, d);
}

// Numerical value exp(i*pi*units/d) on the unit circle.
std::complex<double> phase_value(PhaseExponent p, int d);

}  // namespace qdistill
