#pragma once

#include <cstddef>
#include <vector>

#include "mnum/polymset.hpp"

namespace mnum {

/// An ordered list of successor applications. Folding `sc` over the steps,
/// starting from the empty polymset, rebuilds the traced value.
struct GenerationTrace {
    std::vector<MultiIndex> steps;

    friend bool operator==(const GenerationTrace&, const GenerationTrace&) = default;
};

// Adds one copy of the polyment at idx.
Polymset sc(const Polymset& a, const MultiIndex& idx);
// Adds alpha copies; alpha = 0 is the identity.
Polymset sc_pow(const Polymset& a, const MultiIndex& idx, const Natural& alpha);
// Removes one copy of the polyment at idx. Unlike msub this is strict:
// throws Error(no_such_copy) when idx is not in the support.
Polymset pd(const Polymset& a, const MultiIndex& idx);

// B is an immediate successor of A: same dimension, A ⊆ B and Card B = Card A + 1.
bool is_immediate_successor(const Polymset& b, const Polymset& a);
// B is an immediate predecessor of A: B ⊆ A and Card B + 1 = Card A.
bool is_immediate_predecessor(const Polymset& b, const Polymset& a);

Polymset generate(std::size_t dim, const std::vector<MultiIndex>& steps);

// Lexicographic trace: each index of the support, in order, repeated by its
// multiplicity. Throws Error(invalid_number) if a multiplicity exceeds 64 bits.
GenerationTrace trace_of(const Polymset& a);

} // namespace mnum
