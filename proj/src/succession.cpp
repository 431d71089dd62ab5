#include "mnum/succession.hpp"

#include <algorithm>

#include "mnum/error.hpp"

namespace mnum {

namespace {

void require_index_dim(const Polymset& a, const MultiIndex& idx)
{
    if (idx.size() != a.dim()) {
        throw Error(Errc::dimension_mismatch, "index " + to_string(idx) + " used with a " +
                                                  std::to_string(a.dim()) + "-dimensional polymset");
    }
}

} // namespace

Polymset sc_pow(const Polymset& a, const MultiIndex& idx, const Natural& alpha)
{
    require_index_dim(a, idx);
    if (alpha.is_zero()) {
        return a;
    }
    std::vector<Component> out(a.components().begin(), a.components().end());
    auto it = std::ranges::lower_bound(out, idx, {}, &Component::index);
    if (it != out.end() && it->index == idx) {
        it->multiplicity += alpha;
    } else {
        out.insert(it, Component{idx, alpha});
    }
    return Polymset::from_canonical(a.dim(), std::move(out));
}

Polymset sc(const Polymset& a, const MultiIndex& idx)
{
    return sc_pow(a, idx, Natural(1));
}

Polymset pd(const Polymset& a, const MultiIndex& idx)
{
    require_index_dim(a, idx);
    std::vector<Component> out(a.components().begin(), a.components().end());
    auto it = std::ranges::lower_bound(out, idx, {}, &Component::index);
    if (it == out.end() || it->index != idx) {
        throw Error(Errc::no_such_copy, "no copy of " + to_string(idx) + " to remove");
    }
    it->multiplicity.decrement();
    if (it->multiplicity.is_zero()) {
        out.erase(it);
    }
    return Polymset::from_canonical(a.dim(), std::move(out));
}

bool is_immediate_successor(const Polymset& b, const Polymset& a)
{
    return is_subpolymset(a, b) && cardinality(b) == cardinality(a) + Natural(1);
}

bool is_immediate_predecessor(const Polymset& b, const Polymset& a)
{
    return is_subpolymset(b, a) && cardinality(b) + Natural(1) == cardinality(a);
}

Polymset generate(std::size_t dim, const std::vector<MultiIndex>& steps)
{
    // Same value as folding sc, without re-copying the component list per step.
    std::vector<Component> comps;
    comps.reserve(steps.size());
    for (const auto& idx : steps) {
        if (idx.size() != dim) {
            throw Error(Errc::dimension_mismatch, "step " + to_string(idx) + " in a " +
                                                      std::to_string(dim) + "-dimensional generation");
        }
        comps.push_back({idx, Natural(1)});
    }
    return Polymset::from_components(dim, std::move(comps));
}

GenerationTrace trace_of(const Polymset& a)
{
    GenerationTrace trace;
    for (const auto& c : a.components()) {
        auto count = c.multiplicity.to_u64();
        if (!count) {
            throw Error(Errc::invalid_number, "multiplicity of " + to_string(c.index) +
                                                  " is too large to trace");
        }
        trace.steps.insert(trace.steps.end(), *count, c.index);
    }
    return trace;
}

} // namespace mnum
