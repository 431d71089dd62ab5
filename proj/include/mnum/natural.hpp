#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace mnum {

/// Unbounded non-negative integer used for multiplicities and cardinalities.
///
/// There is no negation and no wrapping: the only subtraction offered is
/// `saturating_sub`, which clamps at zero, and `decrement`, which refuses to go
/// below zero.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t value) : value_(value) {}

    /// Parses a non-empty string of decimal digits. Throws Error(invalid_number).
    static Natural parse(std::string_view digits);

    bool is_zero() const noexcept { return value_.is_zero(); }
    std::string to_string() const;
    std::optional<std::uint64_t> to_u64() const;

    Natural& operator+=(const Natural& rhs)
    {
        value_ += rhs.value_;
        return *this;
    }
    Natural& operator*=(const Natural& rhs)
    {
        value_ *= rhs.value_;
        return *this;
    }
    // this += a * b
    void add_product(const Natural& a, const Natural& b);

    Natural& increment()
    {
        ++value_;
        return *this;
    }
    // Throws Error(invalid_number) on zero.
    Natural& decrement();

    friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
    friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }

    friend bool operator==(const Natural& a, const Natural& b) noexcept
    {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept
    {
        return a.value_.compare(b.value_) <=> 0;
    }

    friend Natural saturating_sub(const Natural& a, const Natural& b);
    friend Natural abs_diff(const Natural& a, const Natural& b);
    // Quotient and remainder by a non-zero machine word.
    friend std::pair<Natural, std::uint64_t> divmod(const Natural& a, std::uint64_t divisor);

private:
    explicit Natural(boost::multiprecision::cpp_int value) : value_(std::move(value)) {}

    boost::multiprecision::cpp_int value_;
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

} // namespace mnum
