#include "mnum/lang/parser.hpp"

#include <algorithm>
#include <initializer_list>

#include "mnum/error.hpp"
#include "mnum/lang/lexer.hpp"

namespace mnum::lang {

char symbol(BinaryOp op) noexcept
{
    switch (op) {
    case BinaryOp::add: return '+';
    case BinaryOp::mul: return '*';
    case BinaryOp::sub: return '-';
    case BinaryOp::unite: return '|';
    case BinaryOp::intersect: return '&';
    case BinaryOp::symdiff: return '^';
    }
    return '?';
}

std::string to_string(const Expr& e)
{
    struct Visitor {
        std::string operator()(const Literal& l) const
        {
            return l.value ? to_string(*l.value) : std::string("{}");
        }
        std::string operator()(const Number& n) const { return n.value.to_string(); }
        std::string operator()(const Var& v) const { return v.name; }
        std::string operator()(const Binary& b) const
        {
            return std::string("(") + symbol(b.op) + " " + to_string(*b.lhs) + " " + to_string(*b.rhs) + ")";
        }
        std::string operator()(const Call& c) const
        {
            std::string out = c.function + "(";
            for (std::size_t i = 0; i < c.args.size(); ++i) {
                out += (i == 0 ? "" : ", ") + to_string(*c.args[i]);
            }
            return out + ")";
        }
    };
    return std::visit(Visitor{}, e.node);
}

std::string Diagnostic::format() const
{
    std::string out = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
    if (!expected.empty()) {
        out += " (expected ";
        if (expected.size() > 1) {
            out += "one of: ";
        }
        for (std::size_t i = 0; i < expected.size(); ++i) {
            out += (i == 0 ? "" : ", ") + expected[i];
        }
        out += ")";
    }
    return out;
}

namespace {

const std::vector<std::string> kPrimaryStart{"integer", "identifier", "'('", "'{'", "'['"};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    Program program()
    {
        Program out;
        while (true) {
            while (peek().kind == TokenKind::newline || peek().kind == TokenKind::semicolon) {
                ++pos_;
            }
            if (peek().kind == TokenKind::end) {
                return out;
            }
            out.push_back(statement());
            if (peek().kind != TokenKind::newline && peek().kind != TokenKind::semicolon &&
                peek().kind != TokenKind::end) {
                fail({"operator", "';'", "end of line"});
            }
        }
    }

    ExprPtr single_expression()
    {
        skip_newlines();
        auto e = expression();
        skip_newlines();
        if (peek().kind != TokenKind::end) {
            fail({"operator", "end of input"});
        }
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const
    {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }

    const Token& take() { return tokens_[pos_++]; }

    void skip_newlines()
    {
        while (peek().kind == TokenKind::newline) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        const Token& t = peek();
        std::string found = t.kind == TokenKind::integer || t.kind == TokenKind::identifier
                                ? describe(t.kind) + " '" + t.text + "'"
                                : describe(t.kind);
        throw SyntaxError({t.pos, "unexpected " + found, std::move(expected)}, t.kind == TokenKind::end);
    }

    [[noreturn]] void fail_at(SourcePos pos, std::string message) const
    {
        throw SyntaxError({pos, std::move(message), {}});
    }

    const Token& expect(TokenKind kind)
    {
        if (peek().kind != kind) {
            fail({describe(kind)});
        }
        return take();
    }

    Statement statement()
    {
        Statement s;
        s.pos = peek().pos;
        if (peek().kind == TokenKind::identifier && peek(1).kind == TokenKind::assign) {
            s.binding = take().text;
            ++pos_;
        }
        s.expr = expression();
        return s;
    }

    template <class Sub>
    ExprPtr left_assoc(Sub sub, std::initializer_list<std::pair<TokenKind, BinaryOp>> ops)
    {
        auto lhs = (this->*sub)();
        while (true) {
            auto it = std::ranges::find(ops, peek().kind, &std::pair<TokenKind, BinaryOp>::first);
            if (it == ops.end()) {
                return lhs;
            }
            const SourcePos at = take().pos;
            auto rhs = (this->*sub)();
            lhs = std::make_unique<Expr>(Expr{at, Binary{it->second, std::move(lhs), std::move(rhs)}});
        }
    }

    ExprPtr expression()
    {
        return left_assoc(&Parser::sum, {{TokenKind::pipe, BinaryOp::unite},
                                         {TokenKind::amp, BinaryOp::intersect},
                                         {TokenKind::caret, BinaryOp::symdiff}});
    }

    ExprPtr sum()
    {
        return left_assoc(&Parser::product, {{TokenKind::plus, BinaryOp::add}, {TokenKind::minus, BinaryOp::sub}});
    }

    ExprPtr product() { return left_assoc(&Parser::primary, {{TokenKind::star, BinaryOp::mul}}); }

    ExprPtr primary()
    {
        const Token& t = peek();
        const SourcePos at = t.pos;
        switch (t.kind) {
        case TokenKind::integer:
            return std::make_unique<Expr>(Expr{at, Number{Natural::parse(take().text)}});
        case TokenKind::identifier: {
            std::string name = take().text;
            if (peek().kind != TokenKind::lparen) {
                return std::make_unique<Expr>(Expr{at, Var{std::move(name)}});
            }
            ++pos_;
            Call call{std::move(name), {}};
            if (peek().kind != TokenKind::rparen) {
                call.args.push_back(expression());
                while (peek().kind == TokenKind::comma) {
                    ++pos_;
                    call.args.push_back(expression());
                }
            }
            if (peek().kind != TokenKind::rparen) {
                fail({"operator", "','", "')'"});
            }
            ++pos_;
            return std::make_unique<Expr>(Expr{at, std::move(call)});
        }
        case TokenKind::lparen: {
            ++pos_;
            auto inner = expression();
            if (peek().kind != TokenKind::rparen) {
                fail({"operator", "')'"});
            }
            ++pos_;
            return inner;
        }
        case TokenKind::lbrace:
            return sparse_literal();
        case TokenKind::lbracket:
            return matrix_literal();
        default:
            fail(kPrimaryStart);
        }
    }

    MultiIndex::value_type coordinate()
    {
        const Token& t = expect(TokenKind::integer);
        auto value = Natural::parse(t.text).to_u64();
        if (!value) {
            fail_at(t.pos, "number-overflow: coordinate " + t.text + " does not fit 64 bits");
        }
        return *value;
    }

    ExprPtr sparse_literal()
    {
        const SourcePos at = take().pos;
        std::optional<std::size_t> dim;
        std::optional<SourcePos> dim_pos;
        std::vector<Component> comps;
        std::vector<SourcePos> comp_pos;

        if (peek().kind != TokenKind::rbrace) {
            while (true) {
                if (peek().kind == TokenKind::identifier && peek().text == "dim") {
                    dim_pos = take().pos;
                    if (dim) {
                        fail_at(*dim_pos, "duplicate dim annotation");
                    }
                    expect(TokenKind::assign);
                    const Token& n = peek();
                    auto value = coordinate();
                    if (value == 0) {
                        fail_at(n.pos, "dimension must be at least 1");
                    }
                    dim = value;
                } else if (peek().kind == TokenKind::lparen) {
                    comp_pos.push_back(take().pos);
                    std::vector<MultiIndex::value_type> coords{coordinate()};
                    while (peek().kind == TokenKind::comma) {
                        ++pos_;
                        coords.push_back(coordinate());
                    }
                    if (peek().kind != TokenKind::rparen) {
                        fail({"','", "')'"});
                    }
                    ++pos_;
                    expect(TokenKind::colon);
                    comps.push_back({MultiIndex(coords), Natural::parse(expect(TokenKind::integer).text)});
                } else {
                    fail({"'('", "'dim'"});
                }
                if (peek().kind == TokenKind::comma) {
                    ++pos_;
                    continue;
                }
                if (peek().kind != TokenKind::rbrace) {
                    fail({"','", "'}'"});
                }
                break;
            }
        }
        ++pos_;

        if (!dim && comps.empty()) {
            return std::make_unique<Expr>(Expr{at, Literal{}});
        }
        const std::size_t d = dim ? *dim : comps.front().index.size();
        for (std::size_t k = 0; k < comps.size(); ++k) {
            if (comps[k].index.size() != d) {
                fail_at(comp_pos[k], "index " + mnum::to_string(comps[k].index) + " has " +
                                         std::to_string(comps[k].index.size()) + " coordinates, expected " +
                                         std::to_string(d));
            }
        }
        return std::make_unique<Expr>(Expr{at, Literal{Polymset::from_components(d, std::move(comps))}});
    }

    ExprPtr matrix_literal()
    {
        const SourcePos at = take().pos;
        std::vector<Component> comps;
        std::optional<std::size_t> width;
        MultiIndex::value_type row = 0;

        if (peek().kind != TokenKind::rbracket) {
            while (true) {
                const SourcePos row_pos = expect(TokenKind::lbracket).pos;
                MultiIndex::value_type col = 0;
                if (peek().kind != TokenKind::rbracket) {
                    while (true) {
                        Natural m = Natural::parse(expect(TokenKind::integer).text);
                        if (!m.is_zero()) {
                            comps.push_back({MultiIndex{row, col}, std::move(m)});
                        }
                        ++col;
                        if (peek().kind == TokenKind::comma) {
                            ++pos_;
                            continue;
                        }
                        if (peek().kind != TokenKind::rbracket) {
                            fail({"','", "']'"});
                        }
                        break;
                    }
                }
                ++pos_;
                if (width && *width != col) {
                    fail_at(row_pos, "matrix row " + std::to_string(row) + " has " + std::to_string(col) +
                                         " entries, expected " + std::to_string(*width));
                }
                width = col;
                ++row;
                if (peek().kind == TokenKind::comma) {
                    ++pos_;
                    continue;
                }
                if (peek().kind != TokenKind::rbracket) {
                    fail({"','", "']'"});
                }
                break;
            }
        }
        ++pos_;
        return std::make_unique<Expr>(Expr{at, Literal{Polymset::from_canonical(2, std::move(comps))}});
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

Program parse_program(std::string_view text)
{
    return Parser(text).program();
}

ExprPtr parse_expression(std::string_view text)
{
    return Parser(text).single_expression();
}

} // namespace mnum::lang
