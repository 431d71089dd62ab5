#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mnum/lang/ast.hpp"

namespace mnum::lang {

struct Diagnostic {
    SourcePos pos;
    std::string message;
    std::vector<std::string> expected;

    // "3:7: unexpected ')' (expected one of: integer, identifier)"
    std::string format() const;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(Diagnostic diag, bool at_end = false)
        : std::runtime_error(diag.format()), diag_(std::move(diag)), at_end_(at_end)
    {
    }

    const Diagnostic& diagnostic() const noexcept { return diag_; }
    // The input stopped before the construct was finished; a REPL can read on.
    bool at_end() const noexcept { return at_end_; }

private:
    Diagnostic diag_;
    bool at_end_;
};

class EvalError : public std::runtime_error {
public:
    EvalError(SourcePos pos, const std::string& message)
        : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
          pos_(pos)
    {
    }

    SourcePos pos() const noexcept { return pos_; }

private:
    SourcePos pos_;
};

} // namespace mnum::lang
