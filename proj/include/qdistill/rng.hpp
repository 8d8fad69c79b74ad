#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace qdistill {

// Deterministic generator with a platform-independent stream (splitmix64
// core, Box-Muller normals). All randomness in the library flows through
// explicit seeds; there is no global state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = next_double();
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * M_PI * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    std::complex<double> next_complex_gaussian() {
        double re = next_gaussian();
        double im = next_gaussian();
        return {re, im};
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Derives an independent per-task seed from a master seed and a task index,
// so parallel evaluation order cannot affect results.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    Rng r(master ^ (0x517cc1b727220a95ULL * (index + 1)));
    return r.next_u64();
}

}  // namespace qdistill
