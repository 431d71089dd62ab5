#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mnum/domain_base.hpp"
#include "mnum/polymset.hpp"

namespace mnum {

/// The on-disk form of a polymset, a JSON object:
///
///   {
///     "dim": 2,
///     "entries": [[[0, 0], 1], [[1, 1], 2]],
///     "domain_base": [{"name": "form", "elements": ["cube", "sphere"]}, ...]
///   }
///
/// `domain_base` is optional. A multiplicity is a JSON integer, or a string of
/// decimal digits when it does not fit 64 bits. Canonical documents list entries
/// in lexicographic index order without zero multiplicities; readers accept any
/// order, repeats (summed) and zeros (dropped).
struct Document {
    Polymset value;
    std::optional<DomainBase> domain_base;

    friend bool operator==(const Document&, const Document&) = default;
};

/// Throws Error(malformed_document) when the text is not JSON and
/// Error(invalid_document) when it does not follow the schema. With a domain
/// base attached, every index is range-checked against it.
Document read_document(std::string_view text);

// Canonical text, one entry per line, ending in a newline.
std::string write_document(const Document& doc);

} // namespace mnum
