#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mnum {

enum class Errc {
    invalid_dimension,
    dimension_mismatch,
    invalid_axis,
    conservation_violation,
    invalid_splitter,
    no_such_copy,
    index_overflow,
    invalid_number,
    invalid_domain_base,
    label_not_found,
    index_out_of_domain,
    universe_too_large,
    unsupported_style,
    malformed_document,
    invalid_document,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace mnum
