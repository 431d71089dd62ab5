#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>

#include "mnum/polymset.hpp"

namespace mnum {

// Outcome of comparing A with B under +.
struct Equal {
    friend bool operator==(const Equal&, const Equal&) = default;
};
// A = B + witness, witness non-zero.
struct GreaterBy {
    Polymset witness;
    friend bool operator==(const GreaterBy&, const GreaterBy&) = default;
};
// B = A + witness, witness non-zero.
struct LessBy {
    Polymset witness;
    friend bool operator==(const LessBy&, const LessBy&) = default;
};
// Neither is obtainable from the other by addition.
struct Incomparable {
    friend bool operator==(const Incomparable&, const Incomparable&) = default;
};

using TetratomyResult = std::variant<Equal, GreaterBy, LessBy, Incomparable>;

Polymset zero(std::size_t dim);
// Multiplicity 1 at the all-zeros index.
Polymset one(std::size_t dim);
// Generator with multiplicity 1 at idx.
Polymset unit(const MultiIndex& idx);

// Pointwise sum; the same operation as msum.
Polymset add(const Polymset& a, const Polymset& b);

// Translates every index by `offset`.
Polymset shift(const Polymset& a, const MultiIndex& offset);

/// Index convolution: the multiplicity at s is the sum of a(p) * b(q) over all
/// p + q = s (componentwise index addition). Throws Error(dimension_mismatch)
/// and Error(index_overflow).
Polymset mul(const Polymset& a, const Polymset& b);

TetratomyResult compare_tetratomy(const Polymset& a, const Polymset& b);

// "Equal", "GreaterBy({...})", "LessBy({...})" or "Incomparable".
std::string to_string(const TetratomyResult& r);
std::ostream& operator<<(std::ostream& os, const TetratomyResult& r);

} // namespace mnum
