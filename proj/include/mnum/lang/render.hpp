#pragma once

#include <string>
#include <string_view>

#include "mnum/lang/eval.hpp"

namespace mnum::lang {

enum class Style { sparse, matrix };

// Throws Error(unsupported_style) on an unknown name.
Style parse_style(std::string_view name);

/// Sparse style is the canonical literal (see to_string(const Polymset&)).
/// Matrix style prints a dense 2-dimensional grid from index (0,0) to the
/// largest row and column in the support, e.g. "[[1,0],[0,2]]", and "[]" for
/// the zero. Both forms parse back to the same value. Matrix style throws
/// Error(unsupported_style) unless dim() == 2.
std::string render(const Polymset& a, Style style);
std::string render(const Value& v, Style style);

} // namespace mnum::lang
