#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cayley/errors.hpp"

namespace cayley {

/// Signed 128-bit integer whose every operation detects overflow.
///
/// Height-bounded counting multiplies four coordinates of size up to B, so
/// intermediates reach B^4; 128 bits covers all documented budgets with a
/// wide margin.  On overflow the operation throws capacity_error naming
/// itself, per the library-wide exact-or-absent rule.
class Int128 {
public:
    constexpr Int128() noexcept = default;
    constexpr Int128(int v) noexcept : v_(v) {}
    constexpr Int128(long v) noexcept : v_(v) {}
    constexpr Int128(long long v) noexcept : v_(v) {}
    constexpr Int128(unsigned v) noexcept : v_(v) {}
    constexpr Int128(unsigned long v) noexcept : v_(v) {}
    constexpr Int128(unsigned long long v) noexcept : v_(v) {}

    static constexpr Int128 from_raw(__int128 v) noexcept {
        Int128 r;
        r.v_ = v;
        return r;
    }
    constexpr __int128 raw() const noexcept { return v_; }

    friend Int128 operator+(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw capacity_error("Int128 addition overflow");
        return from_raw(r);
    }
    friend Int128 operator-(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw capacity_error("Int128 subtraction overflow");
        return from_raw(r);
    }
    friend Int128 operator*(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw capacity_error("Int128 multiplication overflow");
        return from_raw(r);
    }
    friend Int128 operator/(Int128 a, Int128 b) {
        if (b.v_ == 0) throw std::invalid_argument("Int128 division by zero");
        if (a.v_ == min_raw() && b.v_ == -1) throw capacity_error("Int128 division overflow");
        return from_raw(a.v_ / b.v_);
    }
    friend Int128 operator%(Int128 a, Int128 b) {
        if (b.v_ == 0) throw std::invalid_argument("Int128 remainder by zero");
        if (a.v_ == min_raw() && b.v_ == -1) return from_raw(0);
        return from_raw(a.v_ % b.v_);
    }
    Int128 operator-() const {
        if (v_ == min_raw()) throw capacity_error("Int128 negation overflow");
        return from_raw(-v_);
    }

    Int128& operator+=(Int128 o) { return *this = *this + o; }
    Int128& operator-=(Int128 o) { return *this = *this - o; }
    Int128& operator*=(Int128 o) { return *this = *this * o; }
    Int128& operator/=(Int128 o) { return *this = *this / o; }
    Int128& operator%=(Int128 o) { return *this = *this % o; }

    friend constexpr bool operator==(Int128 a, Int128 b) noexcept { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Int128 a, Int128 b) noexcept { return a.v_ != b.v_; }
    friend constexpr bool operator<(Int128 a, Int128 b) noexcept { return a.v_ < b.v_; }
    friend constexpr bool operator<=(Int128 a, Int128 b) noexcept { return a.v_ <= b.v_; }
    friend constexpr bool operator>(Int128 a, Int128 b) noexcept { return a.v_ > b.v_; }
    friend constexpr bool operator>=(Int128 a, Int128 b) noexcept { return a.v_ >= b.v_; }

    Int128 abs() const {
        if (v_ == min_raw()) throw capacity_error("Int128 abs overflow");
        return from_raw(v_ < 0 ? -v_ : v_);
    }
    constexpr int sign() const noexcept { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }
    constexpr bool is_zero() const noexcept { return v_ == 0; }

    constexpr bool fits_int64() const noexcept {
        return v_ >= static_cast<__int128>(INT64_MIN) && v_ <= static_cast<__int128>(INT64_MAX);
    }
    std::int64_t to_int64() const {
        if (!fits_int64()) throw capacity_error("Int128 does not fit in 64 bits");
        return static_cast<std::int64_t>(v_);
    }
    double to_double() const noexcept { return static_cast<double>(v_); }

    std::string str() const;
    static Int128 parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, Int128 v);

private:
    static constexpr __int128 min_raw() noexcept {
        return static_cast<__int128>(1) << 127;
    }

    __int128 v_ = 0;
};

/// Greatest common divisor, always non-negative; gcd(0, 0) = 0.
Int128 gcd(Int128 a, Int128 b);

}  // namespace cayley
