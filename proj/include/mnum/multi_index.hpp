#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>

namespace mnum {

/// Address of one polyment: an m-tuple of 0-based domain positions, m >= 1.
class MultiIndex {
public:
    using value_type = std::uint64_t;

    MultiIndex(std::initializer_list<value_type> coords);
    explicit MultiIndex(std::span<const value_type> coords);

    static MultiIndex zeros(std::size_t dim);

    std::size_t size() const noexcept { return coords_.size(); }
    value_type operator[](std::size_t i) const noexcept { return coords_[i]; }
    std::span<const value_type> coords() const noexcept { return {coords_.data(), coords_.size()}; }

    // Index with coordinate `axis` removed; requires size() >= 2.
    MultiIndex without(std::size_t axis) const;
    // Index with `value` inserted before position `axis` (axis <= size()).
    MultiIndex with_inserted(std::size_t axis, value_type value) const;

    // Componentwise sum. Throws Error(dimension_mismatch) or Error(index_overflow).
    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) noexcept
    {
        return std::ranges::equal(a.coords(), b.coords());
    }
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept
    {
        return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                      b.coords_.begin(), b.coords_.end());
    }

private:
    MultiIndex() = default;

    boost::container::small_vector<value_type, 4> coords_;
};

// "(0,1,5)"
std::string to_string(const MultiIndex& idx);
std::ostream& operator<<(std::ostream& os, const MultiIndex& idx);

} // namespace mnum

template <>
struct std::hash<mnum::MultiIndex> {
    std::size_t operator()(const mnum::MultiIndex& idx) const noexcept
    {
        std::size_t h = idx.size();
        for (auto c : idx.coords()) {
            h ^= std::hash<std::uint64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};
