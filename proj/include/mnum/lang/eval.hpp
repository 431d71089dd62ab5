#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "mnum/lang/ast.hpp"
#include "mnum/lang/diagnostic.hpp"
#include "mnum/semiring.hpp"

namespace mnum::lang {

using Value = std::variant<Polymset, Natural, TetratomyResult>;
using Environment = std::map<std::string, Value, std::less<>>;

/// Evaluates `e` against `env`. Library errors are rethrown as EvalError
/// carrying the position of the offending node.
Value eval(const Expr& e, const Environment& env);

// Runs one statement: a binding updates `env` and yields nothing, a bare
// expression yields its value.
std::optional<Value> execute(const Statement& s, Environment& env);

} // namespace mnum::lang
