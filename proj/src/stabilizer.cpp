#include "qdistill/stabilizer.hpp"

#include <numeric>

namespace qdistill {

namespace {

void require_two_copy(const ErrorElement& e) {
    if (e.copies() != 2) {
        throw DimensionMismatch("operation requires a two-copy error element");
    }
}

}  // namespace

int flat_index(const ErrorElement& e) {
    require_two_copy(e);
    return ((e.k[0] * e.d + e.k[1]) * e.d + e.l[0]) * e.d + e.l[1];
}

ErrorElement element_from_flat(int index, int d) {
    ErrorElement e = ErrorElement::zero(d, 2);
    e.l[1] = index % d;
    index /= d;
    e.l[0] = index % d;
    index /= d;
    e.k[1] = index % d;
    e.k[0] = index / d;
    return e;
}

ErrorElement canonical_generator(const ErrorElement& e) {
    if (e.is_zero()) {
        throw InvalidGenerator("the zero element generates no stabilizer");
    }
    ErrorElement best = e;
    for (int m = 2; m < e.d; ++m) {
        ErrorElement cand = scale(m, e);
        if (cand < best) best = cand;
    }
    return best;
}

Stabilizer make_stabilizer(const ErrorElement& generator) {
    Stabilizer s;
    s.d = generator.d;
    s.generator = canonical_generator(generator);
    s.members.reserve(s.d);
    for (int m = 0; m < s.d; ++m) {
        s.members.push_back(scale(m, s.generator));
    }
    return s;
}

std::vector<Stabilizer> enumerate_stabilizers(int d) {
    PrimeField field(d);  // validates primality
    const int total = d * d * d * d;
    std::vector<char> seen(total, 0);
    std::vector<Stabilizer> out;
    out.reserve((d * d + 1) * (d + 1));
    // Scanning flat indices in ascending order visits each subgroup first at
    // its canonical generator.
    for (int idx = 1; idx < total; ++idx) {
        if (seen[idx]) continue;
        Stabilizer s = make_stabilizer(element_from_flat(idx, d));
        for (int m = 1; m < d; ++m) {
            seen[flat_index(s.members[m])] = 1;
        }
        out.push_back(std::move(s));
    }
    return out;
}

Coset coset_of(const Stabilizer& stab, const ErrorElement& e) {
    require_two_copy(e);
    Coset c;
    c.syndrome = symplectic_product(stab.generator, e);
    c.members.reserve(stab.d);
    for (const ErrorElement& h : stab.members) {
        c.members.push_back(add(e, h));
    }
    c.representative = *std::min_element(c.members.begin(), c.members.end());
    return c;
}

std::vector<ErrorElement> syndrome_class(const Stabilizer& stab, int s) {
    PrimeField field(stab.d);
    s = field.reduce(s);
    const int total = stab.d * stab.d * stab.d * stab.d;
    std::vector<ErrorElement> out;
    out.reserve(total / stab.d);
    for (int idx = 0; idx < total; ++idx) {
        ErrorElement e = element_from_flat(idx, stab.d);
        if (symplectic_product(stab.generator, e) == s) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<Coset> cosets_in(const Stabilizer& stab, int s) {
    PrimeField field(stab.d);
    s = field.reduce(s);
    const int total = stab.d * stab.d * stab.d * stab.d;
    std::vector<char> seen(total, 0);
    std::vector<Coset> out;
    out.reserve(total / (stab.d * stab.d));
    for (int idx = 0; idx < total; ++idx) {
        if (seen[idx]) continue;
        ErrorElement e = element_from_flat(idx, stab.d);
        if (symplectic_product(stab.generator, e) != s) continue;
        Coset c = coset_of(stab, e);
        for (const ErrorElement& m : c.members) {
            seen[flat_index(m)] = 1;
        }
        out.push_back(std::move(c));
    }
    return out;
}

double ErrorDistribution::total() const {
    return std::accumulate(p.begin(), p.end(), 0.0);
}

double coset_probability(const ErrorDistribution& dist, const Coset& coset) {
    double sum = 0.0;
    for (const ErrorElement& m : coset.members) {
        sum += dist.p[flat_index(m)];
    }
    return sum;
}

double class_probability(const ErrorDistribution& dist, const Stabilizer& stab, int s) {
    PrimeField field(stab.d);
    s = field.reduce(s);
    const int total = stab.d * stab.d * stab.d * stab.d;
    double sum = 0.0;
    for (int idx = 0; idx < total; ++idx) {
        if (symplectic_product(stab.generator, element_from_flat(idx, stab.d)) == s) {
            sum += dist.p[idx];
        }
    }
    return sum;
}

}  // namespace qdistill
