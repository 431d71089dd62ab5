#include "mnum/lang/render.hpp"

#include "mnum/error.hpp"

namespace mnum::lang {

namespace {

constexpr std::uint64_t kMaxMatrixCells = 1'000'000;

std::string render_matrix(const Polymset& a)
{
    if (a.dim() != 2) {
        throw Error(Errc::unsupported_style,
                    "matrix style needs a 2-dimensional value, got dimension " + std::to_string(a.dim()));
    }
    if (a.empty()) {
        return "[]";
    }
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    for (const auto& c : a.components()) {
        rows = std::max(rows, c.index[0] + 1);
        cols = std::max(cols, c.index[1] + 1);
    }
    if (rows > kMaxMatrixCells / cols) {
        throw Error(Errc::unsupported_style, "support spans " + std::to_string(rows) + "x" +
                                                 std::to_string(cols) + " cells, too large for matrix style");
    }
    std::string out = "[";
    auto comps = a.components();
    std::size_t next = 0;
    for (std::uint64_t r = 0; r < rows; ++r) {
        out += r == 0 ? "[" : ",[";
        for (std::uint64_t col = 0; col < cols; ++col) {
            if (col != 0) {
                out += ',';
            }
            // Components are sorted row-major, matching the scan order.
            if (next < comps.size() && comps[next].index[0] == r && comps[next].index[1] == col) {
                out += comps[next].multiplicity.to_string();
                ++next;
            } else {
                out += '0';
            }
        }
        out += ']';
    }
    out += ']';
    return out;
}

} // namespace

Style parse_style(std::string_view name)
{
    if (name == "sparse") {
        return Style::sparse;
    }
    if (name == "matrix") {
        return Style::matrix;
    }
    throw Error(Errc::unsupported_style, "unknown style '" + std::string(name) + "'");
}

std::string render(const Polymset& a, Style style)
{
    return style == Style::sparse ? to_string(a) : render_matrix(a);
}

std::string render(const Value& v, Style style)
{
    struct Visitor {
        Style style;
        std::string operator()(const Polymset& a) const { return render(a, style); }
        std::string operator()(const Natural& n) const { return n.to_string(); }
        std::string operator()(const TetratomyResult& r) const
        {
            if (auto* g = std::get_if<GreaterBy>(&r)) {
                return "GreaterBy(" + render(g->witness, style) + ")";
            }
            if (auto* l = std::get_if<LessBy>(&r)) {
                return "LessBy(" + render(l->witness, style) + ")";
            }
            return to_string(r);
        }
    };
    return std::visit(Visitor{style}, v);
}

} // namespace mnum::lang
