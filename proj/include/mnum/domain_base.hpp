#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mnum/multi_index.hpp"

namespace mnum {

class Polymset;

struct Domain {
    std::string name;
    std::vector<std::string> elements;

    friend bool operator==(const Domain&, const Domain&) = default;
};

/// Human-readable labels for index positions: domain i names axis i and its
/// j-th element names coordinate j (0-based).
///
/// Operations on polymsets never consult a domain base. It only matters when a
/// caller attaches one, e.g. an interchange document, in which case indices are
/// range-checked against the domain sizes.
class DomainBase {
public:
    /// Throws Error(invalid_domain_base) on an empty list, duplicate domain
    /// names or duplicate labels within a domain.
    explicit DomainBase(std::vector<Domain> domains);

    std::size_t dim() const noexcept { return domains_.size(); }
    const std::vector<Domain>& domains() const noexcept { return domains_; }

    // Throws Error(label_not_found) or Error(dimension_mismatch).
    MultiIndex resolve(std::span<const std::string_view> labels) const;
    MultiIndex resolve(std::initializer_list<std::string_view> labels) const
    {
        return resolve(std::span<const std::string_view>(labels.begin(), labels.size()));
    }

    // Throws Error(index_out_of_domain) or Error(dimension_mismatch).
    std::vector<std::string> labels(const MultiIndex& idx) const;

    // Checks the dimension and every index of `a` against the domain sizes.
    void validate(const Polymset& a) const;

    friend bool operator==(const DomainBase&, const DomainBase&) = default;

private:
    std::vector<Domain> domains_;
};

} // namespace mnum
