#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mnum/lang/ast.hpp"
#include "mnum/lang/diagnostic.hpp"

namespace mnum::lang {

enum class TokenKind {
    integer,
    identifier,
    lparen,
    rparen,
    lbrace,
    rbrace,
    lbracket,
    rbracket,
    comma,
    colon,
    assign,
    semicolon,
    plus,
    minus,
    star,
    pipe,
    amp,
    caret,
    newline,
    end,
};

// How a token kind is named in diagnostics, e.g. "')'" or "integer".
std::string describe(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string text;
    SourcePos pos;
};

/// Splits source text into tokens. `#` starts a comment running to the end of
/// the line. Line breaks are significant (statement separators) only outside
/// brackets, so literals may span lines. Throws SyntaxError on a stray
/// character.
std::vector<Token> tokenize(std::string_view text);

} // namespace mnum::lang
