#include "mnum/polymset.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <set>

#include "mnum/error.hpp"

namespace mnum {

namespace {

bool less_by_index(const Component& a, const Component& b)
{
    return a.index < b.index;
}

void require_same_dim(const Polymset& a, const Polymset& b, const char* op)
{
    if (a.dim() != b.dim()) {
        throw Error(Errc::dimension_mismatch, std::string(op) + " needs equal dimensions, got " +
                                                  std::to_string(a.dim()) + " and " +
                                                  std::to_string(b.dim()));
    }
}

void require_index_dim(const Polymset& a, const MultiIndex& idx)
{
    if (idx.size() != a.dim()) {
        throw Error(Errc::dimension_mismatch, "index " + to_string(idx) + " used with a " +
                                                  std::to_string(a.dim()) + "-dimensional polymset");
    }
}

// Merges two canonical component lists, combining multiplicities with `f`
// (absent entries read as zero) and dropping zero results.
template <class F>
Polymset merge_pointwise(const Polymset& a, const Polymset& b, F f)
{
    static const Natural zero;
    auto lhs = a.components();
    auto rhs = b.components();
    std::vector<Component> out;
    out.reserve(lhs.size() + rhs.size());

    auto emit = [&out](const MultiIndex& idx, Natural m) {
        if (!m.is_zero()) {
            out.push_back({idx, std::move(m)});
        }
    };

    std::size_t i = 0;
    std::size_t j = 0;
    while (i < lhs.size() || j < rhs.size()) {
        if (j == rhs.size() || (i < lhs.size() && lhs[i].index < rhs[j].index)) {
            emit(lhs[i].index, f(lhs[i].multiplicity, zero));
            ++i;
        } else if (i == lhs.size() || rhs[j].index < lhs[i].index) {
            emit(rhs[j].index, f(zero, rhs[j].multiplicity));
            ++j;
        } else {
            emit(lhs[i].index, f(lhs[i].multiplicity, rhs[j].multiplicity));
            ++i;
            ++j;
        }
    }
    return Polymset::from_canonical(a.dim(), std::move(out));
}

Polymset from_accumulator(std::size_t dim, std::map<MultiIndex, Natural>&& acc)
{
    std::vector<Component> out;
    out.reserve(acc.size());
    for (auto& [idx, m] : acc) {
        if (!m.is_zero()) {
            out.push_back({idx, std::move(m)});
        }
    }
    return Polymset::from_canonical(dim, std::move(out));
}

} // namespace

Polymset::Polymset(std::size_t dim) : dim_(dim)
{
    if (dim == 0) {
        throw Error(Errc::invalid_dimension, "dimension must be at least 1");
    }
}

Polymset Polymset::from_components(std::size_t dim, std::vector<Component> comps)
{
    if (dim == 0) {
        throw Error(Errc::invalid_dimension, "dimension must be at least 1");
    }
    for (const auto& c : comps) {
        if (c.index.size() != dim) {
            throw Error(Errc::dimension_mismatch, "index " + to_string(c.index) + " in a " +
                                                      std::to_string(dim) + "-dimensional polymset");
        }
    }
    std::stable_sort(comps.begin(), comps.end(), less_by_index);

    std::vector<Component> out;
    out.reserve(comps.size());
    for (auto& c : comps) {
        if (!out.empty() && out.back().index == c.index) {
            out.back().multiplicity += c.multiplicity;
        } else {
            out.push_back(std::move(c));
        }
    }
    std::erase_if(out, [](const Component& c) { return c.multiplicity.is_zero(); });
    return Polymset(dim, std::move(out));
}

Polymset Polymset::from_canonical(std::size_t dim, std::vector<Component> comps)
{
    assert(dim >= 1);
    assert(std::ranges::all_of(comps, [&](const Component& c) {
        return c.index.size() == dim && !c.multiplicity.is_zero();
    }));
    assert(std::ranges::adjacent_find(comps, [](const Component& a, const Component& b) {
               return !(a.index < b.index);
           }) == comps.end());
    return Polymset(dim, std::move(comps));
}

Polymset empty(std::size_t dim)
{
    return Polymset(dim);
}

Polymset from_components(std::size_t dim, std::vector<Component> comps)
{
    return Polymset::from_components(dim, std::move(comps));
}

Natural multiplicity(const Polymset& a, const MultiIndex& idx)
{
    require_index_dim(a, idx);
    auto comps = a.components();
    auto it = std::ranges::lower_bound(comps, idx, {}, &Component::index);
    if (it != comps.end() && it->index == idx) {
        return it->multiplicity;
    }
    return Natural();
}

Polymset support(const Polymset& a)
{
    std::vector<Component> out;
    out.reserve(a.size());
    for (const auto& c : a.components()) {
        out.push_back({c.index, Natural(1)});
    }
    return Polymset::from_canonical(a.dim(), std::move(out));
}

Natural cardinality(const Polymset& a)
{
    Natural total;
    for (const auto& c : a.components()) {
        total += c.multiplicity;
    }
    return total;
}

Natural height(const Polymset& a)
{
    Natural best;
    for (const auto& c : a.components()) {
        best = std::max(best, c.multiplicity);
    }
    return best;
}

bool is_subpolymset(const Polymset& a, const Polymset& b)
{
    if (a.dim() != b.dim()) {
        return false;
    }
    auto rhs = b.components();
    std::size_t j = 0;
    for (const auto& c : a.components()) {
        while (j < rhs.size() && rhs[j].index < c.index) {
            ++j;
        }
        if (j == rhs.size() || rhs[j].index != c.index || rhs[j].multiplicity < c.multiplicity) {
            return false;
        }
    }
    return true;
}

RelationReport relate(const Polymset& a, const Polymset& b)
{
    RelationReport r;
    r.equidimensional = a.dim() == b.dim();
    r.equal = a == b;
    r.similar = r.equidimensional && support(a) == support(b);
    r.left_sub_right = is_subpolymset(a, b);
    r.right_sub_left = is_subpolymset(b, a);
    r.equicardinal = cardinality(a) == cardinality(b);
    r.equivalent = r.equicardinal && r.equidimensional;
    return r;
}

BoundednessReport boundedness(const Polymset& a, std::optional<Natural> n,
                              const std::optional<std::map<MultiIndex, Natural>>& bounds)
{
    BoundednessReport r;
    auto comps = a.components();
    r.constant = std::ranges::all_of(comps, [&](const Component& c) {
        return c.multiplicity == comps.front().multiplicity;
    });
    if (n) {
        r.n_bounded = height(a) <= *n;
    }
    if (bounds) {
        for (const auto& [idx, bound] : *bounds) {
            require_index_dim(a, idx);
        }
        r.individually_bounded = std::ranges::all_of(comps, [&](const Component& c) {
            auto it = bounds->find(c.index);
            return it == bounds->end() || c.multiplicity <= it->second;
        });
    }
    return r;
}

Polymset unite(const Polymset& a, const Polymset& b)
{
    require_same_dim(a, b, "union");
    return merge_pointwise(a, b, [](const Natural& x, const Natural& y) { return std::max(x, y); });
}

Polymset intersect(const Polymset& a, const Polymset& b)
{
    require_same_dim(a, b, "intersection");
    return merge_pointwise(a, b, [](const Natural& x, const Natural& y) { return std::min(x, y); });
}

Polymset msum(const Polymset& a, const Polymset& b)
{
    require_same_dim(a, b, "addition");
    return merge_pointwise(a, b, [](const Natural& x, const Natural& y) { return x + y; });
}

Polymset msub(const Polymset& a, const Polymset& b)
{
    require_same_dim(a, b, "subtraction");
    return merge_pointwise(a, b, [](const Natural& x, const Natural& y) { return saturating_sub(x, y); });
}

Polymset symdiff(const Polymset& a, const Polymset& b)
{
    require_same_dim(a, b, "symmetric difference");
    return merge_pointwise(a, b, [](const Natural& x, const Natural& y) { return abs_diff(x, y); });
}

Polymset reduce(const Polymset& a, std::size_t axis)
{
    if (a.dim() < 2) {
        throw Error(Errc::invalid_dimension,
                    "cannot reduce a 1-dimensional polymset; use cardinality");
    }
    if (axis >= a.dim()) {
        throw Error(Errc::invalid_axis, "axis " + std::to_string(axis) + " out of range for dimension " +
                                            std::to_string(a.dim()));
    }
    std::map<MultiIndex, Natural> acc;
    for (const auto& c : a.components()) {
        acc[c.index.without(axis)] += c.multiplicity;
    }
    return from_accumulator(a.dim() - 1, std::move(acc));
}

Polymset produce(const Polymset& a, std::size_t axis, const Splitter& splitter)
{
    if (axis > a.dim()) {
        throw Error(Errc::invalid_axis, "insertion axis " + std::to_string(axis) +
                                            " out of range for dimension " + std::to_string(a.dim()));
    }
    std::vector<Component> out;
    for (const auto& c : a.components()) {
        auto parts = splitter(c.index, c.multiplicity);
        std::set<MultiIndex::value_type> seen;
        Natural total;
        for (auto& part : parts) {
            if (!seen.insert(part.coordinate).second) {
                throw Error(Errc::invalid_splitter, "splitter repeated coordinate " +
                                                        std::to_string(part.coordinate) + " for " +
                                                        to_string(c.index));
            }
            total += part.multiplicity;
            out.push_back({c.index.with_inserted(axis, part.coordinate), std::move(part.multiplicity)});
        }
        if (total != c.multiplicity) {
            throw Error(Errc::conservation_violation,
                        "splitter parts for " + to_string(c.index) + " sum to " + total.to_string() +
                            ", expected " + c.multiplicity.to_string());
        }
    }
    return Polymset::from_components(a.dim() + 1, std::move(out));
}

Splitter delta_splitter()
{
    return [](const MultiIndex&, const Natural& m) { return std::vector<Split>{{0, m}}; };
}

Splitter even_splitter(MultiIndex::value_type parts)
{
    if (parts == 0) {
        throw Error(Errc::invalid_splitter, "even splitter needs at least one part");
    }
    return [parts](const MultiIndex&, const Natural& m) {
        auto [share, rest] = divmod(m, parts);
        std::vector<Split> out;
        for (MultiIndex::value_type t = 0; t < parts; ++t) {
            Natural here = t == 0 ? share + Natural(rest) : share;
            if (!here.is_zero()) {
                out.push_back({t, std::move(here)});
            }
        }
        return out;
    };
}

std::string to_string(const Polymset& a)
{
    if (a.empty()) {
        return "{dim=" + std::to_string(a.dim()) + "}";
    }
    std::string out = "{";
    bool first = true;
    for (const auto& c : a.components()) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += to_string(c.index);
        out += ':';
        out += c.multiplicity.to_string();
    }
    out += '}';
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polymset& a)
{
    return os << to_string(a);
}

} // namespace mnum
