#include "mnum/semiring.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "mnum/error.hpp"

namespace mnum {

namespace {

void require_same_dim(const Polymset& a, const Polymset& b, const char* op)
{
    if (a.dim() != b.dim()) {
        throw Error(Errc::dimension_mismatch, std::string(op) + " needs equal dimensions, got " +
                                                  std::to_string(a.dim()) + " and " +
                                                  std::to_string(b.dim()));
    }
}

// Dense accumulation pays off while the result's bounding box is not much
// larger than the number of partial products.
constexpr std::uint64_t kDenseCellLimit = 1u << 20;

struct Box {
    std::vector<std::uint64_t> lo;
    std::vector<std::uint64_t> hi;
};

Box bounding_box(const Polymset& a)
{
    Box box{std::vector<std::uint64_t>(a.dim(), std::numeric_limits<std::uint64_t>::max()),
            std::vector<std::uint64_t>(a.dim(), 0)};
    for (const auto& c : a.components()) {
        for (std::size_t d = 0; d < a.dim(); ++d) {
            box.lo[d] = std::min(box.lo[d], c.index[d]);
            box.hi[d] = std::max(box.hi[d], c.index[d]);
        }
    }
    return box;
}

Polymset mul_dense(const Polymset& a, const Polymset& b, const std::vector<std::uint64_t>& lo,
                   const std::vector<std::uint64_t>& extent, std::uint64_t cells)
{
    const std::size_t dim = a.dim();
    // Row-major strides keep the linear order lexicographic.
    std::vector<std::uint64_t> stride(dim, 1);
    for (std::size_t d = dim - 1; d > 0; --d) {
        stride[d - 1] = stride[d] * extent[d];
    }
    auto offset_of = [&](const MultiIndex& idx, const std::vector<std::uint64_t>& base) {
        std::uint64_t off = 0;
        for (std::size_t d = 0; d < dim; ++d) {
            off += (idx[d] - base[d]) * stride[d];
        }
        return off;
    };
    auto box_a = bounding_box(a);
    auto box_b = bounding_box(b);
    std::vector<std::uint64_t> a_off;
    std::vector<std::uint64_t> b_off;
    for (const auto& c : a.components()) {
        a_off.push_back(offset_of(c.index, box_a.lo));
    }
    for (const auto& c : b.components()) {
        b_off.push_back(offset_of(c.index, box_b.lo));
    }

    std::vector<Natural> grid(cells);
    std::vector<bool> touched(cells, false);
    auto ac = a.components();
    auto bc = b.components();
    for (std::size_t i = 0; i < ac.size(); ++i) {
        for (std::size_t j = 0; j < bc.size(); ++j) {
            auto cell = a_off[i] + b_off[j];
            grid[cell].add_product(ac[i].multiplicity, bc[j].multiplicity);
            touched[cell] = true;
        }
    }

    std::vector<Component> out;
    std::vector<std::uint64_t> coords(dim);
    for (std::uint64_t cell = 0; cell < cells; ++cell) {
        if (!touched[cell]) {
            continue;
        }
        std::uint64_t rest = cell;
        for (std::size_t d = 0; d < dim; ++d) {
            coords[d] = lo[d] + rest / stride[d];
            rest %= stride[d];
        }
        out.push_back({MultiIndex(coords), std::move(grid[cell])});
    }
    return Polymset::from_canonical(dim, std::move(out));
}

Polymset mul_sparse(const Polymset& a, const Polymset& b)
{
    std::vector<Component> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& x : a.components()) {
        for (const auto& y : b.components()) {
            terms.push_back({x.index + y.index, x.multiplicity * y.multiplicity});
        }
    }
    return Polymset::from_components(a.dim(), std::move(terms));
}

} // namespace

Polymset zero(std::size_t dim)
{
    return Polymset(dim);
}

Polymset one(std::size_t dim)
{
    return unit(MultiIndex::zeros(dim));
}

Polymset unit(const MultiIndex& idx)
{
    return Polymset::from_canonical(idx.size(), {Component{idx, Natural(1)}});
}

Polymset add(const Polymset& a, const Polymset& b)
{
    return msum(a, b);
}

Polymset shift(const Polymset& a, const MultiIndex& offset)
{
    if (offset.size() != a.dim()) {
        throw Error(Errc::dimension_mismatch, "shift by " + to_string(offset) + " of a " +
                                                  std::to_string(a.dim()) + "-dimensional polymset");
    }
    // Translation is monotone in lexicographic order, so the result stays sorted.
    std::vector<Component> out;
    out.reserve(a.size());
    for (const auto& c : a.components()) {
        out.push_back({c.index + offset, c.multiplicity});
    }
    return Polymset::from_canonical(a.dim(), std::move(out));
}

Polymset mul(const Polymset& a, const Polymset& b)
{
    require_same_dim(a, b, "multiplication");
    if (a.empty() || b.empty()) {
        return Polymset(a.dim());
    }
    const std::size_t dim = a.dim();
    auto box_a = bounding_box(a);
    auto box_b = bounding_box(b);

    std::vector<std::uint64_t> lo(dim);
    std::vector<std::uint64_t> extent(dim);
    std::uint64_t cells = 1;
    bool dense = true;
    for (std::size_t d = 0; d < dim; ++d) {
        if (box_a.hi[d] > std::numeric_limits<std::uint64_t>::max() - box_b.hi[d]) {
            throw Error(Errc::index_overflow, "product index coordinate overflow");
        }
        lo[d] = box_a.lo[d] + box_b.lo[d];
        std::uint64_t span = (box_a.hi[d] - box_a.lo[d]) + (box_b.hi[d] - box_b.lo[d]);
        if (dense && span >= kDenseCellLimit / cells) {
            dense = false;
        } else if (dense) {
            extent[d] = span + 1;
            cells *= extent[d];
        }
    }
    const std::uint64_t products = static_cast<std::uint64_t>(a.size()) * b.size();
    if (dense && cells <= std::max<std::uint64_t>(64, 8 * products)) {
        return mul_dense(a, b, lo, extent, cells);
    }
    return mul_sparse(a, b);
}

TetratomyResult compare_tetratomy(const Polymset& a, const Polymset& b)
{
    require_same_dim(a, b, "comparison");
    if (a == b) {
        return Equal{};
    }
    if (is_subpolymset(b, a)) {
        return GreaterBy{msub(a, b)};
    }
    if (is_subpolymset(a, b)) {
        return LessBy{msub(b, a)};
    }
    return Incomparable{};
}

std::string to_string(const TetratomyResult& r)
{
    struct Visitor {
        std::string operator()(const Equal&) const { return "Equal"; }
        std::string operator()(const GreaterBy& g) const { return "GreaterBy(" + to_string(g.witness) + ")"; }
        std::string operator()(const LessBy& l) const { return "LessBy(" + to_string(l.witness) + ")"; }
        std::string operator()(const Incomparable&) const { return "Incomparable"; }
    };
    return std::visit(Visitor{}, r);
}

std::ostream& operator<<(std::ostream& os, const TetratomyResult& r)
{
    return os << to_string(r);
}

} // namespace mnum
