#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace whittaker {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// An integer or half-integer, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int v) : d_(2 * static_cast<std::int64_t>(v)) {}  // NOLINT implicit on purpose

    static constexpr HalfInt from_doubled(std::int64_t d) {
        HalfInt h;
        h.d_ = d;
        return h;
    }
    // Accepts "3", "-2", "7/2", "-1/2".
    static HalfInt parse(std::string_view s);

    constexpr std::int64_t doubled() const { return d_; }
    constexpr bool is_integer() const { return (d_ & 1) == 0; }
    constexpr bool is_half() const { return !is_integer(); }
    double to_double() const { return static_cast<double>(d_) / 2.0; }
    Rational to_rational() const { return Rational(BigInt(d_), BigInt(2)); }
    // Only meaningful when is_integer().
    constexpr std::int64_t as_int() const { return d_ / 2; }

    constexpr HalfInt operator-() const { return from_doubled(-d_); }
    constexpr HalfInt& operator+=(HalfInt o) { d_ += o.d_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { d_ -= o.d_; return *this; }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
    friend constexpr HalfInt operator*(HalfInt a, std::int64_t k) { return from_doubled(a.d_ * k); }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return from_doubled(a.d_ * k); }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.d_ <=> b.d_; }

    std::string str() const;

private:
    std::int64_t d_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h.doubled() < 0 ? -h : h; }
constexpr int sgn(HalfInt h) { return (h.doubled() > 0) - (h.doubled() < 0); }
// Both integers or both half-integers.
constexpr bool same_parity(HalfInt a, HalfInt b) { return ((a.doubled() - b.doubled()) & 1) == 0; }

std::ostream& operator<<(std::ostream& os, HalfInt h);

}  // namespace whittaker

template <>
struct std::hash<whittaker::HalfInt> {
    std::size_t operator()(whittaker::HalfInt h) const noexcept {
        return std::hash<std::int64_t>{}(h.doubled());
    }
};
