#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mnum/polymset.hpp"

namespace mnum::oracle {

// A + B by structural recursion on B:
//   A + 0 = A,  A + sc(B', i) = sc(A + B', i)
// peeling B's lexicographically smallest unit first.
Polymset add_via_successors(const Polymset& a, const Polymset& b);

// A * B by structural recursion on B:
//   A * 0 = 0,  A * sc(B', i) = A * B' + shift(A, i)
Polymset mul_recursive(const Polymset& a, const Polymset& b);

/// A finite carrier: every polymset of dimension `dim` whose support lies in the
/// grid [0, max_index[0]] x ... x [0, max_index[dim-1]] and whose multiplicities
/// are at most `max_mult`.
struct UniverseSpec {
    std::size_t dim = 2;
    std::vector<std::uint64_t> max_index{1, 1};
    std::uint64_t max_mult = 1;
};

// "dim=2 max_index=(1,1) max_mult=1"
std::string to_string(const UniverseSpec& spec);

// All grid indices, lexicographic. Throws Error(universe_too_large) past 2^20 cells.
std::vector<MultiIndex> grid_indices(const UniverseSpec& spec);

// (max_mult+1)^cells. Throws Error(universe_too_large) if that overflows 64 bits.
std::uint64_t universe_size(const UniverseSpec& spec);

/// Deterministic stream over a universe. The first value is the zero; the
/// multiplicity of the first grid cell varies fastest.
class UniverseEnumerator {
public:
    explicit UniverseEnumerator(const UniverseSpec& spec);

    std::uint64_t size() const noexcept { return size_; }
    std::optional<Polymset> next();

private:
    UniverseSpec spec_;
    std::vector<MultiIndex> cells_;
    std::vector<std::uint64_t> digits_;
    std::uint64_t size_;
    std::uint64_t produced_ = 0;
};

UniverseEnumerator enumerate_universe(const UniverseSpec& spec);

// Collects the whole universe. Throws Error(universe_too_large) past 2^20 elements.
std::vector<Polymset> materialize_universe(const UniverseSpec& spec);

using BinaryOp = std::function<Polymset(const Polymset&, const Polymset&)>;

// The + and * under test. Swapping one out is how the checker is mutation-tested.
struct Arithmetic {
    BinaryOp add;
    BinaryOp mul;

    static Arithmetic standard();
};

// Deliberately wrong multiplications, for showing that check_laws notices.
namespace faults {

// Multiplies multiplicities index by index instead of convolving.
Polymset pointwise_mul(const Polymset& a, const Polymset& b);
// Convolution that overwrites colliding partial products instead of adding them.
Polymset mul_dropping_carries(const Polymset& a, const Polymset& b);

} // namespace faults

enum class Coverage { exhaustive, sampled };

struct LawResult {
    std::string law;
    std::string universe;
    bool passed = true;
    std::optional<std::string> counterexample;
    Coverage coverage = Coverage::exhaustive;
    std::uint64_t evaluations = 0;
};

struct LawReport {
    std::vector<LawResult> results;

    bool all_passed() const;
    const LawResult* find(const std::string& law) const;
};

struct LawCheckOptions {
    // Laws whose full input product exceeds this many evaluations are sampled.
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 20090101;
    Arithmetic arithmetic = Arithmetic::standard();
};

/// Runs the successor axioms, the semiring laws and the oracle equivalences
/// over `spec`. The report lists laws in a fixed order; each failing law keeps
/// its first counterexample in enumeration (or sampling) order.
LawReport check_laws(const UniverseSpec& spec, const LawCheckOptions& options = {});

// JSON array of {law, universe, status, coverage, evaluations, counterexample?}.
std::string to_json(const LawReport& report);

} // namespace mnum::oracle
