#include "mnum/error.hpp"

namespace mnum {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::invalid_dimension: return "invalid-dimension";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::invalid_axis: return "invalid-axis";
    case Errc::conservation_violation: return "conservation-violation";
    case Errc::invalid_splitter: return "invalid-splitter";
    case Errc::no_such_copy: return "no-such-copy";
    case Errc::index_overflow: return "index-overflow";
    case Errc::invalid_number: return "invalid-number";
    case Errc::invalid_domain_base: return "invalid-domain-base";
    case Errc::label_not_found: return "label-not-found";
    case Errc::index_out_of_domain: return "index-out-of-domain";
    case Errc::universe_too_large: return "universe-too-large";
    case Errc::unsupported_style: return "unsupported-style";
    case Errc::malformed_document: return "malformed-document";
    case Errc::invalid_document: return "invalid-document";
    }
    return "unknown-error";
}

} // namespace mnum
