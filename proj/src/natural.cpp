#include "mnum/natural.hpp"

#include <limits>
#include <ostream>

#include "mnum/error.hpp"

namespace mnum {

Natural Natural::parse(std::string_view digits)
{
    if (digits.empty()) {
        throw Error(Errc::invalid_number, "empty numeral");
    }
    boost::multiprecision::cpp_int value;
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw Error(Errc::invalid_number, "not a decimal numeral: '" + std::string(digits) + "'");
        }
        value *= 10;
        value += c - '0';
    }
    return Natural(std::move(value));
}

std::string Natural::to_string() const
{
    return value_.str();
}

std::optional<std::uint64_t> Natural::to_u64() const
{
    if (value_ > std::numeric_limits<std::uint64_t>::max()) {
        return std::nullopt;
    }
    return value_.convert_to<std::uint64_t>();
}

void Natural::add_product(const Natural& a, const Natural& b)
{
    thread_local boost::multiprecision::cpp_int product;
    boost::multiprecision::multiply(product, a.value_, b.value_);
    value_ += product;
}

Natural& Natural::decrement()
{
    if (value_.is_zero()) {
        throw Error(Errc::invalid_number, "decrement below zero");
    }
    --value_;
    return *this;
}

Natural saturating_sub(const Natural& a, const Natural& b)
{
    if (a.value_ <= b.value_) {
        return Natural();
    }
    return Natural(a.value_ - b.value_);
}

Natural abs_diff(const Natural& a, const Natural& b)
{
    return a.value_ < b.value_ ? Natural(b.value_ - a.value_) : Natural(a.value_ - b.value_);
}

std::pair<Natural, std::uint64_t> divmod(const Natural& a, std::uint64_t divisor)
{
    if (divisor == 0) {
        throw Error(Errc::invalid_number, "division by zero");
    }
    boost::multiprecision::cpp_int q;
    boost::multiprecision::cpp_int r;
    boost::multiprecision::divide_qr(a.value_, boost::multiprecision::cpp_int(divisor), q, r);
    return {Natural(std::move(q)), r.convert_to<std::uint64_t>()};
}

std::ostream& operator<<(std::ostream& os, const Natural& n)
{
    return os << n.to_string();
}

} // namespace mnum
