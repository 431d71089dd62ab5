#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mnum/multi_index.hpp"
#include "mnum/natural.hpp"

namespace mnum {

/// One polyment together with its multiplicity.
struct Component {
    MultiIndex index;
    Natural multiplicity;

    friend bool operator==(const Component&, const Component&) = default;
};

/// A polymultiset over an m-dimensional domain base, also read as a natural
/// m-number.
///
/// The representation is canonical: components are sorted lexicographically by
/// index, indices are unique, every index has length dim() and no stored
/// multiplicity is zero. Two values are equal exactly when their dimensions and
/// component lists coincide. Values are immutable once built.
class Polymset {
public:
    /// The empty polymset of dimension `dim`. Throws Error(invalid_dimension) for 0.
    explicit Polymset(std::size_t dim);

    /// Builds from an arbitrary component list: duplicate indices are summed and
    /// zero multiplicities dropped. Throws Error(dimension_mismatch) when an index
    /// length differs from `dim`.
    static Polymset from_components(std::size_t dim, std::vector<Component> comps);

    /// Adopts a component list that is already canonical. Only checked in debug
    /// builds; library code uses it to skip the sort.
    static Polymset from_canonical(std::size_t dim, std::vector<Component> comps);

    std::size_t dim() const noexcept { return dim_; }
    std::span<const Component> components() const noexcept { return comps_; }
    bool empty() const noexcept { return comps_.empty(); }
    // Number of distinct polyments (size of the support).
    std::size_t size() const noexcept { return comps_.size(); }

    friend bool operator==(const Polymset&, const Polymset&) = default;

private:
    Polymset(std::size_t dim, std::vector<Component> comps) : dim_(dim), comps_(std::move(comps)) {}

    std::size_t dim_;
    std::vector<Component> comps_;
};

struct RelationReport {
    bool equal = false;
    bool similar = false;
    bool left_sub_right = false;
    bool right_sub_left = false;
    bool equicardinal = false;
    bool equidimensional = false;
    bool equivalent = false;
};

struct BoundednessReport {
    bool constant = false;
    std::optional<bool> n_bounded;
    std::optional<bool> individually_bounded;
};

/// A splitter distributes one multiplicity over the coordinates of a new axis.
struct Split {
    MultiIndex::value_type coordinate;
    Natural multiplicity;
};
using Splitter = std::function<std::vector<Split>(const MultiIndex&, const Natural&)>;

Polymset empty(std::size_t dim);
Polymset from_components(std::size_t dim, std::vector<Component> comps);

Natural multiplicity(const Polymset& a, const MultiIndex& idx);
Polymset support(const Polymset& a);
Natural cardinality(const Polymset& a);
Natural height(const Polymset& a);

// Componentwise a <= b; false when dimensions differ.
bool is_subpolymset(const Polymset& a, const Polymset& b);
RelationReport relate(const Polymset& a, const Polymset& b);
BoundednessReport boundedness(const Polymset& a, std::optional<Natural> n = std::nullopt,
                              const std::optional<std::map<MultiIndex, Natural>>& bounds = std::nullopt);

// Binary operations require equal dimensions; they throw Error(dimension_mismatch)
// otherwise.
Polymset unite(const Polymset& a, const Polymset& b);     // pointwise max
Polymset intersect(const Polymset& a, const Polymset& b); // pointwise min
Polymset msum(const Polymset& a, const Polymset& b);      // pointwise sum
Polymset msub(const Polymset& a, const Polymset& b);      // pointwise max(a - b, 0)
Polymset symdiff(const Polymset& a, const Polymset& b);   // pointwise |a - b|

/// Removes `axis`, summing multiplicities along it. Cardinality is preserved.
/// Throws Error(invalid_dimension) on a 1-dimensional input (use cardinality)
/// and Error(invalid_axis) when axis >= dim.
Polymset reduce(const Polymset& a, std::size_t axis);

/// Inserts a new axis before position `axis` (0..dim), spreading every
/// multiplicity over new coordinates with `splitter`. The splitter's parts must
/// use distinct coordinates (Error(invalid_splitter)) and add up to the original
/// multiplicity (Error(conservation_violation)).
Polymset produce(const Polymset& a, std::size_t axis, const Splitter& splitter);

// All mass at new coordinate 0.
Splitter delta_splitter();
// `parts` equal shares over coordinates 0..parts-1, remainder added at 0.
Splitter even_splitter(MultiIndex::value_type parts);

// Sparse literal form: "{(0,0):1,(1,1):2}", or "{dim=2}" when empty.
std::string to_string(const Polymset& a);
std::ostream& operator<<(std::ostream& os, const Polymset& a);

} // namespace mnum
