#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qdistill/field.hpp"

using namespace qdistill;

TEST_CASE("primality check at construction") {
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(3));
    CHECK_NOTHROW(PrimeField(5));
    CHECK_NOTHROW(PrimeField(97));
    CHECK_THROWS_AS(PrimeField(1), NotPrime);
    CHECK_THROWS_AS(PrimeField(4), NotPrime);
    CHECK_THROWS_AS(PrimeField(9), NotPrime);
    CHECK_THROWS_AS(PrimeField(0), NotPrime);
    CHECK_THROWS_AS(PrimeField(-3), NotPrime);
}

TEST_CASE("field inverse examples") {
    CHECK(PrimeField(3).inverse(1) == 1);
    CHECK(PrimeField(3).inverse(2) == 2);  // 2*2 = 4 = 1 mod 3
    CHECK(PrimeField(5).inverse(3) == 2);  // 3*2 = 6 = 1 mod 5
    CHECK_THROWS_AS(PrimeField(3).inverse(0), NoInverse);
    CHECK_THROWS_AS(PrimeField(5).inverse(5), NoInverse);  // reduces to 0
}

TEST_CASE("inverse involution and cancellation, exhaustive for small d") {
    for (int d : {2, 3, 5, 7}) {
        PrimeField f(d);
        for (int a = 1; a < d; ++a) {
            int inv = f.inverse(a);
            CHECK(f.mul(a, inv) == 1);
            CHECK(f.inverse(inv) == a);
            for (int b = 0; b < d; ++b) {
                CHECK(f.mul(a, f.mul(inv, b)) == b);
            }
        }
    }
}

TEST_CASE("reduce maps any integer into [0, d)") {
    PrimeField f(5);
    CHECK(f.reduce(-1) == 4);
    CHECK(f.reduce(-12) == 3);
    CHECK(f.reduce(17) == 2);
    CHECK(f.reduce(0) == 0);
}

TEST_CASE("phase value examples") {
    CHECK(std::abs(phase_value({0}, 3) - std::complex<double>(1.0, 0.0)) < 1e-15);
    for (int d : {2, 3, 5}) {
        CHECK(std::abs(phase_value({d}, d) - std::complex<double>(-1.0, 0.0)) < 1e-15);
    }
    // tau = i for d = 2: the half-integer omega power.
    CHECK(std::abs(phase_value({1}, 2) - std::complex<double>(0.0, 1.0)) < 1e-15);
}

TEST_CASE("phase exponents compose additively mod 2d") {
    for (int d : {2, 3, 5}) {
        for (int p1 = 0; p1 < 2 * d; ++p1) {
            for (int p2 = 0; p2 < 2 * d; ++p2) {
                auto lhs = phase_value({p1}, d) * phase_value({p2}, d);
                auto rhs = phase_value(phase_add({p1}, {p2}, d), d);
                CHECK(std::abs(lhs - rhs) < 1e-14);
                CHECK(std::abs(std::abs(phase_value({p1}, d)) - 1.0) < 1e-15);
            }
        }
    }
}

TEST_CASE("omega power is the doubled tau exponent") {
    CHECK(omega_power(1, 3).units == 2);
    CHECK(omega_power(2, 3).units == 4);
    CHECK(omega_power(3, 3).units == 0);
    CHECK(omega_power(-1, 3).units == 4);
}
