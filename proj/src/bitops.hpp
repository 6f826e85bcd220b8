#pragma once

// Bit-level utilities over fixed-width two's-complement integers.
//
// Every shift happens on the unsigned reinterpretation of the value, so
// none of this depends on whether the platform's signed right shift is
// arithmetic or logical.

#include <bit>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace bws {

template <class T>
concept sortable_int = std::integral<T> && !std::same_as<std::remove_cv_t<T>, bool>;

// Width t in bits of the element type.
template <sortable_int T>
inline constexpr unsigned bit_width_of = sizeof(T) * 8;

namespace detail {

template <sortable_int T>
using unsigned_t = std::make_unsigned_t<T>;

template <sortable_int T>
constexpr unsigned_t<T> to_unsigned(T x) noexcept {
    return static_cast<unsigned_t<T>>(x);
}

// |x| as an unsigned value. The minimum signed value has no signed
// absolute value; wrapping negation yields its magnitude 2^(t-1).
template <sortable_int T>
constexpr unsigned_t<T> magnitude(T x) noexcept {
    unsigned_t<T> u = to_unsigned(x);
    if constexpr (std::is_signed_v<T>) {
        if (x < 0) u = static_cast<unsigned_t<T>>(unsigned_t<T>{0} - u);
    }
    return u;
}

[[noreturn]] inline void throw_bit_range(const char* op, unsigned pos, unsigned width) {
    throw std::out_of_range(std::string(op) + ": bit position " + std::to_string(pos) +
                            " out of range for " + std::to_string(width) + "-bit element");
}

}  // namespace detail

/// Value (0 or 1) of bit i of the two's-complement representation of x,
/// bit 0 being the least significant.
template <sortable_int T>
int bit_value(T x, unsigned i) {
    if (i >= bit_width_of<T>) detail::throw_bit_range("bit_value", i, bit_width_of<T>);
    return static_cast<int>((detail::to_unsigned(x) >> i) & 1u);
}

/// 2^n as an unsigned value of the element's width. Shifting by the full
/// width or more is rejected rather than silently wrapped.
template <sortable_int T>
detail::unsigned_t<T> power2(unsigned n) {
    if (n >= bit_width_of<T>) detail::throw_bit_range("power2", n, bit_width_of<T>);
    return static_cast<detail::unsigned_t<T>>(detail::unsigned_t<T>{1} << n);
}

/// x / 2^n rounded toward zero: extract the sign, shift the unsigned
/// magnitude, restore the sign.
template <sortable_int T>
T div_pow2(T x, unsigned n) {
    if (n >= bit_width_of<T>) detail::throw_bit_range("div_pow2", n, bit_width_of<T>);
    if constexpr (std::is_unsigned_v<T>) {
        return static_cast<T>(detail::to_unsigned(x) >> n);
    } else {
        auto shifted = static_cast<detail::unsigned_t<T>>(detail::magnitude(x) >> n);
        if (x < 0) shifted = static_cast<detail::unsigned_t<T>>(detail::unsigned_t<T>{0} - shifted);
        return static_cast<T>(shifted);
    }
}

/// Full t-character memory image of x, most significant bit first,
/// leading zeros included.
template <sortable_int T>
std::string bin_repr(T x) {
    constexpr unsigned t = bit_width_of<T>;
    const auto bits = detail::to_unsigned(x);
    std::string out(t, '0');
    for (unsigned d = 0; d < t; ++d) {
        if ((bits >> d) & 1u) out[t - 1 - d] = '1';
    }
    return out;
}

/// Binary notation of |x| with insignificant leading zeros skipped,
/// prefixed with '-' when x is negative. Zero renders as "0".
template <sortable_int T>
std::string dec_to_bin(T x) {
    const auto mag = detail::magnitude(x);
    std::string out;
    if constexpr (std::is_signed_v<T>) {
        if (x < 0) out.push_back('-');
    }
    int d = static_cast<int>(bit_width_of<T>) - 1;
    while (d > 0 && ((mag >> d) & 1u) == 0) --d;
    for (; d >= 0; --d) out.push_back(((mag >> d) & 1u) ? '1' : '0');
    return out;
}

/// Number of 1 digits in the binary notation of |x|.
template <sortable_int T>
int popcount_abs(T x) {
    return std::popcount(detail::magnitude(x));
}

}  // namespace bws
