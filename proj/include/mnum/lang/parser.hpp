#pragma once

#include <string_view>

#include "mnum/lang/ast.hpp"
#include "mnum/lang/diagnostic.hpp"

namespace mnum::lang {

/// Grammar, loosest binding first; all binary operators are left-associative:
///
///   program   := { [statement] (newline | ';') }
///   statement := identifier '=' expr | expr
///   expr      := sum { ('|' | '&' | '^') sum }
///   sum       := product { ('+' | '-') product }
///   product   := primary { '*' primary }
///   primary   := integer | identifier [ '(' [expr {',' expr}] ')' ]
///              | '(' expr ')' | sparse | matrix
///   sparse    := '{' [item {',' item}] '}'
///   item      := '(' integer {',' integer} ')' ':' integer | 'dim' '=' integer
///   matrix    := '[' [row {',' row}] ']'
///   row       := '[' [integer {',' integer}] ']'
///
/// Matrix literals are 2-dimensional: row = first coordinate, column = second.
/// Throws SyntaxError.
Program parse_program(std::string_view text);

// A single expression spanning the whole input.
ExprPtr parse_expression(std::string_view text);

} // namespace mnum::lang
