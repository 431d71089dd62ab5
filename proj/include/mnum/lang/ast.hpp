#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mnum/natural.hpp"
#include "mnum/polymset.hpp"

namespace mnum::lang {

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;

    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class BinaryOp { add, mul, sub, unite, intersect, symdiff };

char symbol(BinaryOp op) noexcept;

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

// A sparse or matrix literal. `value` is empty for a bare `{}`, whose
// dimension cannot be known.
struct Literal {
    std::optional<Polymset> value;
};

// Bare integer; used for indices, axes, dimensions and scalar arithmetic.
struct Number {
    Natural value;
};

struct Var {
    std::string name;
};

struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Call {
    std::string function;
    std::vector<ExprPtr> args;
};

struct Expr {
    SourcePos pos;
    std::variant<Literal, Number, Var, Binary, Call> node;
};

// `name = expr` when binding is set, a bare expression otherwise.
struct Statement {
    SourcePos pos;
    std::optional<std::string> binding;
    ExprPtr expr;
};

using Program = std::vector<Statement>;

// Compact prefix form for diagnostics and tests, e.g. "(+ {(0,0):1} x)".
std::string to_string(const Expr& e);

} // namespace mnum::lang
