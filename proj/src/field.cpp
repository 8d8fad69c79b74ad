#include "qdistill/field.hpp"

#include <cmath>

namespace qdistill {

bool is_prime(int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (int f = 3; static_cast<long long>(f) * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(int d) : d_(d) {
    if (!is_prime(d)) {
        throw NotPrime("modulus " + std::to_string(d) + " is not prime");
    }
}

int PrimeField::inverse(int a) const {
    int v = reduce(a);
    if (v == 0) {
        throw NoInverse("0 has no multiplicative inverse mod " + std::to_string(d_));
    }
    // Fermat: a^{d-2} = a^{-1} for prime d. d is desk-scale, so square-and-multiply
    // on ints is plenty.
    long long base = v, acc = 1;
    int e = d_ - 2;
    while (e > 0) {
        if (e & 1) acc = acc * base % d_;
        base = base * base % d_;
        e >>= 1;
    }
    return static_cast<int>(acc);
}

int PrimeField::half() const {
    if (d_ == 2) {
        throw NoInverse("2 has no inverse mod 2");
    }
    return inverse(2);
}

std::complex<double> phase_value(PhaseExponent p, int d) {
    return std::polar(1.0, M_PI * static_cast<double>(phase_reduce(p, d).units) / d);
}

}  // namespace qdistill
