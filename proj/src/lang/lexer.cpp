#include "mnum/lang/lexer.hpp"

#include <algorithm>
#include <cctype>

namespace mnum::lang {

std::string describe(TokenKind kind)
{
    switch (kind) {
    case TokenKind::integer: return "integer";
    case TokenKind::identifier: return "identifier";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::comma: return "','";
    case TokenKind::colon: return "':'";
    case TokenKind::assign: return "'='";
    case TokenKind::semicolon: return "';'";
    case TokenKind::plus: return "'+'";
    case TokenKind::minus: return "'-'";
    case TokenKind::star: return "'*'";
    case TokenKind::pipe: return "'|'";
    case TokenKind::amp: return "'&'";
    case TokenKind::caret: return "'^'";
    case TokenKind::newline: return "end of line";
    case TokenKind::end: return "end of input";
    }
    return "token";
}

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    SourcePos pos;
    int depth = 0;
    std::size_t i = 0;

    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
        }
    };

    while (i < text.size()) {
        const char c = text[i];
        const SourcePos start = pos;
        if (c == '\n') {
            if (depth == 0) {
                out.push_back({TokenKind::newline, "\n", start});
            }
            advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                advance(1);
            }
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t n = 0;
            while (i + n < text.size() && std::isdigit(static_cast<unsigned char>(text[i + n]))) {
                ++n;
            }
            out.push_back({TokenKind::integer, std::string(text.substr(i, n)), start});
            advance(n);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t n = 0;
            while (i + n < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i + n])) || text[i + n] == '_')) {
                ++n;
            }
            out.push_back({TokenKind::identifier, std::string(text.substr(i, n)), start});
            advance(n);
            continue;
        }

        TokenKind kind;
        switch (c) {
        case '(': kind = TokenKind::lparen; ++depth; break;
        case ')': kind = TokenKind::rparen; --depth; break;
        case '{': kind = TokenKind::lbrace; ++depth; break;
        case '}': kind = TokenKind::rbrace; --depth; break;
        case '[': kind = TokenKind::lbracket; ++depth; break;
        case ']': kind = TokenKind::rbracket; --depth; break;
        case ',': kind = TokenKind::comma; break;
        case ':': kind = TokenKind::colon; break;
        case '=': kind = TokenKind::assign; break;
        case ';': kind = TokenKind::semicolon; break;
        case '+': kind = TokenKind::plus; break;
        case '-': kind = TokenKind::minus; break;
        case '*': kind = TokenKind::star; break;
        case '|': kind = TokenKind::pipe; break;
        case '&': kind = TokenKind::amp; break;
        case '^': kind = TokenKind::caret; break;
        default:
            throw SyntaxError({start, std::string("unexpected character '") + c + "'", {}});
        }
        // Unbalanced closers are left for the parser to report.
        depth = std::max(depth, 0);
        out.push_back({kind, std::string(1, c), start});
        advance(1);
    }
    out.push_back({TokenKind::end, "", pos});
    return out;
}

} // namespace mnum::lang
