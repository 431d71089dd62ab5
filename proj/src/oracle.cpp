#include "mnum/oracle.hpp"

#include <limits>
#include <map>

#include "mnum/error.hpp"
#include "mnum/semiring.hpp"
#include "mnum/succession.hpp"

namespace mnum::oracle {

namespace {

constexpr std::uint64_t kMaxCells = 1u << 20;
constexpr std::uint64_t kMaxMaterialized = 1u << 20;

void require_same_dim(const Polymset& a, const Polymset& b)
{
    if (a.dim() != b.dim()) {
        throw Error(Errc::dimension_mismatch, "operands have dimensions " + std::to_string(a.dim()) +
                                                  " and " + std::to_string(b.dim()));
    }
}

// The units of b in the order the recursion peels them: repeatedly take the
// smallest index of what is left and remove one copy with pd.
std::vector<MultiIndex> peel_units(const Polymset& b)
{
    std::vector<MultiIndex> peeled;
    Polymset rest = b;
    while (!rest.empty()) {
        MultiIndex first = rest.components().front().index;
        rest = pd(rest, first);
        peeled.push_back(std::move(first));
    }
    return peeled;
}

void validate(const UniverseSpec& spec)
{
    if (spec.dim == 0) {
        throw Error(Errc::invalid_dimension, "universe dimension must be at least 1");
    }
    if (spec.max_index.size() != spec.dim) {
        throw Error(Errc::dimension_mismatch, "max_index has " + std::to_string(spec.max_index.size()) +
                                                  " entries for dimension " + std::to_string(spec.dim));
    }
}

std::uint64_t cell_count(const UniverseSpec& spec)
{
    validate(spec);
    std::uint64_t cells = 1;
    for (auto m : spec.max_index) {
        if (m >= kMaxCells || cells > kMaxCells / (m + 1)) {
            throw Error(Errc::universe_too_large, "grid of " + to_string(spec) + " is too large");
        }
        cells *= m + 1;
    }
    return cells;
}

} // namespace

Polymset add_via_successors(const Polymset& a, const Polymset& b)
{
    require_same_dim(a, b);
    auto peeled = peel_units(b);
    Polymset acc = a;
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        acc = sc(acc, *it);
    }
    return acc;
}

Polymset mul_recursive(const Polymset& a, const Polymset& b)
{
    require_same_dim(a, b);
    auto peeled = peel_units(b);
    Polymset acc(a.dim());
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        acc = msum(acc, shift(a, *it));
    }
    return acc;
}

std::string to_string(const UniverseSpec& spec)
{
    std::string out = "dim=" + std::to_string(spec.dim) + " max_index=(";
    for (std::size_t i = 0; i < spec.max_index.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(spec.max_index[i]);
    }
    out += ") max_mult=" + std::to_string(spec.max_mult);
    return out;
}

std::vector<MultiIndex> grid_indices(const UniverseSpec& spec)
{
    const std::uint64_t cells = cell_count(spec);
    std::vector<MultiIndex> out;
    out.reserve(cells);
    std::vector<std::uint64_t> coords(spec.dim, 0);
    for (std::uint64_t n = 0; n < cells; ++n) {
        out.emplace_back(coords);
        for (std::size_t d = spec.dim; d-- > 0;) {
            if (coords[d] < spec.max_index[d]) {
                ++coords[d];
                break;
            }
            coords[d] = 0;
        }
    }
    return out;
}

std::uint64_t universe_size(const UniverseSpec& spec)
{
    const std::uint64_t cells = cell_count(spec);
    if (spec.max_mult == std::numeric_limits<std::uint64_t>::max()) {
        throw Error(Errc::universe_too_large, "universe of " + to_string(spec) + " is too large");
    }
    const std::uint64_t base = spec.max_mult + 1;
    std::uint64_t size = 1;
    for (std::uint64_t i = 0; i < cells; ++i) {
        if (size > std::numeric_limits<std::uint64_t>::max() / base) {
            throw Error(Errc::universe_too_large, "universe of " + to_string(spec) + " is too large");
        }
        size *= base;
    }
    return size;
}

UniverseEnumerator::UniverseEnumerator(const UniverseSpec& spec)
    : spec_(spec), cells_(grid_indices(spec)), digits_(cells_.size(), 0), size_(universe_size(spec))
{
}

std::optional<Polymset> UniverseEnumerator::next()
{
    if (produced_ == size_) {
        return std::nullopt;
    }
    std::vector<Component> comps;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
        if (digits_[c] != 0) {
            comps.push_back({cells_[c], Natural(digits_[c])});
        }
    }
    ++produced_;
    for (auto& digit : digits_) {
        if (digit < spec_.max_mult) {
            ++digit;
            break;
        }
        digit = 0;
    }
    return Polymset::from_canonical(spec_.dim, std::move(comps));
}

UniverseEnumerator enumerate_universe(const UniverseSpec& spec)
{
    return UniverseEnumerator(spec);
}

std::vector<Polymset> materialize_universe(const UniverseSpec& spec)
{
    auto stream = enumerate_universe(spec);
    if (stream.size() > kMaxMaterialized) {
        throw Error(Errc::universe_too_large, "universe of " + to_string(spec) + " has " +
                                                  std::to_string(stream.size()) + " elements");
    }
    std::vector<Polymset> out;
    out.reserve(stream.size());
    while (auto a = stream.next()) {
        out.push_back(std::move(*a));
    }
    return out;
}

namespace faults {

Polymset pointwise_mul(const Polymset& a, const Polymset& b)
{
    require_same_dim(a, b);
    std::vector<Component> out;
    for (const auto& c : a.components()) {
        Natural m = c.multiplicity * multiplicity(b, c.index);
        if (!m.is_zero()) {
            out.push_back({c.index, std::move(m)});
        }
    }
    return Polymset::from_canonical(a.dim(), std::move(out));
}

Polymset mul_dropping_carries(const Polymset& a, const Polymset& b)
{
    require_same_dim(a, b);
    std::map<MultiIndex, Natural> acc;
    for (const auto& x : a.components()) {
        for (const auto& y : b.components()) {
            acc.insert_or_assign(x.index + y.index, x.multiplicity * y.multiplicity);
        }
    }
    std::vector<Component> out;
    for (auto& [idx, m] : acc) {
        out.push_back({idx, std::move(m)});
    }
    return Polymset::from_canonical(a.dim(), std::move(out));
}

} // namespace faults

Arithmetic Arithmetic::standard()
{
    return {[](const Polymset& a, const Polymset& b) { return mnum::add(a, b); },
            [](const Polymset& a, const Polymset& b) { return mnum::mul(a, b); }};
}

} // namespace mnum::oracle
