#include "mnum/multi_index.hpp"

#include <limits>
#include <ostream>

#include "mnum/error.hpp"

namespace mnum {

MultiIndex::MultiIndex(std::initializer_list<value_type> coords)
    : MultiIndex(std::span<const value_type>(coords.begin(), coords.size()))
{
}

MultiIndex::MultiIndex(std::span<const value_type> coords) : coords_(coords.begin(), coords.end())
{
    if (coords_.empty()) {
        throw Error(Errc::invalid_dimension, "a multi-index needs at least one coordinate");
    }
}

MultiIndex MultiIndex::zeros(std::size_t dim)
{
    if (dim == 0) {
        throw Error(Errc::invalid_dimension, "dimension must be at least 1");
    }
    MultiIndex idx;
    idx.coords_.assign(dim, 0);
    return idx;
}

MultiIndex MultiIndex::without(std::size_t axis) const
{
    if (axis >= size()) {
        throw Error(Errc::invalid_axis, "axis " + std::to_string(axis) + " out of range");
    }
    if (size() < 2) {
        throw Error(Errc::invalid_dimension, "cannot drop the only coordinate");
    }
    MultiIndex idx;
    idx.coords_ = coords_;
    idx.coords_.erase(idx.coords_.begin() + static_cast<std::ptrdiff_t>(axis));
    return idx;
}

MultiIndex MultiIndex::with_inserted(std::size_t axis, value_type value) const
{
    if (axis > size()) {
        throw Error(Errc::invalid_axis, "axis " + std::to_string(axis) + " out of range");
    }
    MultiIndex idx;
    idx.coords_ = coords_;
    idx.coords_.insert(idx.coords_.begin() + static_cast<std::ptrdiff_t>(axis), value);
    return idx;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b)
{
    if (a.size() != b.size()) {
        throw Error(Errc::dimension_mismatch,
                    "cannot add " + to_string(a) + " and " + to_string(b));
    }
    MultiIndex sum;
    sum.coords_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > std::numeric_limits<MultiIndex::value_type>::max() - b[i]) {
            throw Error(Errc::index_overflow, "index coordinate overflow");
        }
        sum.coords_[i] = a[i] + b[i];
    }
    return sum;
}

std::string to_string(const MultiIndex& idx)
{
    std::string out = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(idx[i]);
    }
    out += ')';
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& idx)
{
    return os << to_string(idx);
}

} // namespace mnum
