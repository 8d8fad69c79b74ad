#pragma once

#include <vector>

#include "qdistill/weyl.hpp"

namespace qdistill {

// Two-copy (N = 2) error elements are stored and ordered as flattened
// 4-tuples (k1, k2, l1, l2) with the k-block first; the flat index below is
// the rank of that tuple in lexicographic order, so numeric index order is
// tuple order.
int flat_index(const ErrorElement& e);
ErrorElement element_from_flat(int index, int d);

// Cyclic order-d subgroup of two-copy error elements, identified by its
// lexicographically smallest nonzero member.
struct Stabilizer {
    int d = 2;
    ErrorElement generator;
    std::vector<ErrorElement> members;  // 0, g, 2g, ..., (d-1)g
};

// Lexicographic minimum over {m*e : m = 1..d-1}; idempotent. Throws
// InvalidGenerator for e = 0.
ErrorElement canonical_generator(const ErrorElement& e);

Stabilizer make_stabilizer(const ErrorElement& generator);

// All (d^2+1)(d+1) distinct single-generator subgroups, sorted by canonical
// generator.
std::vector<Stabilizer> enumerate_stabilizers(int d);

// Coset e + G_S. All members share the syndrome <g, e>.
struct Coset {
    ErrorElement representative;  // lexicographically smallest member
    int syndrome = 0;
    std::vector<ErrorElement> members;
};

Coset coset_of(const Stabilizer& stab, const ErrorElement& e);

// E(s): every two-copy element with syndrome <g, e> = s; size d^3.
std::vector<ErrorElement> syndrome_class(const Stabilizer& stab, int s);

// The d^2 cosets partitioning E(s), ordered by representative.
std::vector<Coset> cosets_in(const Stabilizer& stab, int s);

// Probability distribution over two-copy error elements, dense in flat-index
// order (size d^4).
struct ErrorDistribution {
    int d = 2;
    std::vector<double> p;

    double total() const;
};

double coset_probability(const ErrorDistribution& dist, const Coset& coset);
double class_probability(const ErrorDistribution& dist, const Stabilizer& stab, int s);

}  // namespace qdistill
