#include "mnum/domain_base.hpp"

#include <algorithm>
#include <set>

#include "mnum/error.hpp"
#include "mnum/polymset.hpp"

namespace mnum {

DomainBase::DomainBase(std::vector<Domain> domains) : domains_(std::move(domains))
{
    if (domains_.empty()) {
        throw Error(Errc::invalid_domain_base, "a domain base needs at least one domain");
    }
    std::set<std::string_view> names;
    for (const auto& d : domains_) {
        if (!names.insert(d.name).second) {
            throw Error(Errc::invalid_domain_base, "duplicate domain name '" + d.name + "'");
        }
        std::set<std::string_view> labels;
        for (const auto& e : d.elements) {
            if (!labels.insert(e).second) {
                throw Error(Errc::invalid_domain_base,
                            "duplicate element '" + e + "' in domain '" + d.name + "'");
            }
        }
    }
}

MultiIndex DomainBase::resolve(std::span<const std::string_view> labels) const
{
    if (labels.size() != dim()) {
        throw Error(Errc::dimension_mismatch, std::to_string(labels.size()) + " labels for a " +
                                                  std::to_string(dim()) + "-domain base");
    }
    std::vector<MultiIndex::value_type> coords;
    coords.reserve(labels.size());
    for (std::size_t axis = 0; axis < labels.size(); ++axis) {
        const auto& elements = domains_[axis].elements;
        auto it = std::ranges::find(elements, labels[axis]);
        if (it == elements.end()) {
            throw Error(Errc::label_not_found, "'" + std::string(labels[axis]) + "' is not an element of '" +
                                                   domains_[axis].name + "'");
        }
        coords.push_back(static_cast<MultiIndex::value_type>(it - elements.begin()));
    }
    return MultiIndex(coords);
}

std::vector<std::string> DomainBase::labels(const MultiIndex& idx) const
{
    if (idx.size() != dim()) {
        throw Error(Errc::dimension_mismatch, "index " + to_string(idx) + " for a " +
                                                  std::to_string(dim()) + "-domain base");
    }
    std::vector<std::string> out;
    for (std::size_t axis = 0; axis < idx.size(); ++axis) {
        const auto& elements = domains_[axis].elements;
        if (idx[axis] >= elements.size()) {
            throw Error(Errc::index_out_of_domain, "coordinate " + std::to_string(idx[axis]) +
                                                       " outside domain '" + domains_[axis].name + "'");
        }
        out.push_back(elements[idx[axis]]);
    }
    return out;
}

void DomainBase::validate(const Polymset& a) const
{
    if (a.dim() != dim()) {
        throw Error(Errc::dimension_mismatch, std::to_string(a.dim()) + "-dimensional polymset for a " +
                                                  std::to_string(dim()) + "-domain base");
    }
    for (const auto& c : a.components()) {
        labels(c.index);
    }
}

} // namespace mnum
