#pragma once

// Least-significant-bit binary radix sort with sign splitting.
//
// sort_same_sign runs one stable partition pass per bit position
// k = 0..B-1 (B = t-1 for signed elements, t for unsigned). Induction on
// the passes: after pass s the array is non-decreasing in the unsigned
// value of its low s+1 representation bits. Pass s+1 pulls the elements
// with bit s+1 clear into the zeros bucket and the rest into the ones
// bucket, both in their current order, so each bucket stays sorted on the
// low s+1 bits and the concatenation is sorted on the low s+2 bits.
//
// Negatives need no bit flipping inside a same-sign group: at width t a
// negative x is stored as 2^t + x, so its low t-1 bits read 2^(t-1) + x,
// which is strictly increasing in x; for nonnegative x the low t-1 bits
// are x itself. Splitting by sign, sorting each group on the low t-1
// bits, and concatenating negatives first therefore sorts the array.

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bitops.hpp"

namespace bws {

struct sort_stats {
    std::uint64_t partition_passes = 0;
    // writes of an element into a scratch buffer or back into the array
    std::uint64_t element_moves = 0;
};

struct sort_options {
    // OR-fold the input and skip passes whose bit is set in no element.
    // Off by default: the plain algorithm runs exactly B passes.
    bool skip_empty_bits = false;
    sort_stats* stats = nullptr;
};

/// Partition passes a same-sign sort performs: the sign bit of a signed
/// element is handled by the sign split and never inspected; unsigned
/// elements use every bit.
template <sortable_int T>
inline constexpr unsigned pass_count = std::is_signed_v<T> ? bit_width_of<T> - 1 : bit_width_of<T>;

template <sortable_int T>
struct keyed_record {
    T key;
    std::uint64_t tag;  // opaque payload, carried verbatim through every sort
    friend bool operator==(const keyed_record&, const keyed_record&) = default;
};

// Scratch for one sort call: zeros/ones buckets of capacity n, reused
// across all passes.
template <class Elem>
struct partition_buffers {
    std::vector<Elem> zeros, ones;
    std::size_t zeros_count = 0, ones_count = 0;
    explicit partition_buffers(std::size_t capacity) : zeros(capacity), ones(capacity) {}
};

namespace detail {

struct self_key {
    template <class T>
    constexpr T operator()(T v) const noexcept {
        return v;
    }
};

struct record_key {
    template <class T>
    constexpr T operator()(const keyed_record<T>& r) const noexcept {
        return r.key;
    }
};

// One stable pass on bit k of the key: bucket by bit value, then write
// the zeros bucket back first. Relative order inside each bucket is the
// input order.
template <class Elem, class KeyOf>
void partition_pass(std::span<Elem> a, unsigned k, partition_buffers<Elem>& buf, KeyOf key_of,
                    sort_stats* stats) {
    assert(buf.zeros.size() >= a.size() && buf.ones.size() >= a.size());
    buf.zeros_count = 0;
    buf.ones_count = 0;
    for (const Elem& e : a) {
        if ((to_unsigned(key_of(e)) >> k) & 1u)
            buf.ones[buf.ones_count++] = e;
        else
            buf.zeros[buf.zeros_count++] = e;
    }
    std::size_t i = 0;
    for (std::size_t z = 0; z < buf.zeros_count; ++z) a[i++] = buf.zeros[z];
    for (std::size_t o = 0; o < buf.ones_count; ++o) a[i++] = buf.ones[o];
    if (stats) {
        stats->partition_passes += 1;
        stats->element_moves += 2 * static_cast<std::uint64_t>(a.size());
    }
}

struct no_observer {
    template <class Elem>
    void operator()(unsigned, std::span<const Elem>, std::span<const Elem>,
                    std::span<const Elem>) const noexcept {}
};

template <class Elem, class KeyOf, class Observer>
void sort_same_sign_impl(std::span<Elem> a, KeyOf key_of, sort_options opts, Observer&& observe) {
    using key_type = decltype(key_of(std::declval<const Elem&>()));
    constexpr unsigned passes = pass_count<key_type>;

    partition_buffers<Elem> buf(a.size());
    auto set_bits = static_cast<unsigned_t<key_type>>(~unsigned_t<key_type>{0});
    if (opts.skip_empty_bits) {
        set_bits = 0;
        for (const Elem& e : a) set_bits |= to_unsigned(key_of(e));
    }
    for (unsigned k = 0; k < passes; ++k) {
        if (opts.skip_empty_bits && ((set_bits >> k) & 1u) == 0) continue;
        partition_pass(a, k, buf, key_of, opts.stats);
        observe(k, std::span<const Elem>(buf.zeros.data(), buf.zeros_count),
                std::span<const Elem>(buf.ones.data(), buf.ones_count),
                std::span<const Elem>(a.data(), a.size()));
    }
}

template <class Elem, class KeyOf>
void bitwise_sort_impl(std::span<Elem> a, KeyOf key_of, sort_options opts) {
    using key_type = decltype(key_of(std::declval<const Elem&>()));
    if constexpr (std::is_unsigned_v<key_type>) {
        // no sign bit, no split: every value is in one group
        sort_same_sign_impl(a, key_of, opts, no_observer{});
    } else {
        std::vector<Elem> negatives, nonnegatives;
        negatives.reserve(a.size());
        nonnegatives.reserve(a.size());
        for (const Elem& e : a) (key_of(e) < 0 ? negatives : nonnegatives).push_back(e);
        if (opts.stats) opts.stats->element_moves += a.size();

        sort_same_sign_impl(std::span<Elem>(negatives), key_of, opts, no_observer{});
        sort_same_sign_impl(std::span<Elem>(nonnegatives), key_of, opts, no_observer{});

        std::size_t i = 0;
        for (const Elem& e : negatives) a[i++] = e;
        for (const Elem& e : nonnegatives) a[i++] = e;
        if (opts.stats) opts.stats->element_moves += a.size();
    }
}

}  // namespace detail

/// Stable partition of a on bit k: elements with the bit clear come
/// first, elements with it set follow, each group in input order. The
/// buffers keep the two groups after the call.
template <sortable_int T>
void stable_bit_partition(std::span<T> a, unsigned k, partition_buffers<T>& buffers,
                          sort_stats* stats = nullptr) {
    assert(k < bit_width_of<T>);
    detail::partition_pass(a, k, buffers, detail::self_key{}, stats);
}

/// Sorts elements that all share one sign (vacuously true for unsigned
/// types). Mixed-sign input is out of contract; use bitwise_sort.
template <sortable_int T>
void sort_same_sign(std::span<T> a, sort_options opts = {}) {
    detail::sort_same_sign_impl(a, detail::self_key{}, opts, detail::no_observer{});
}

/// Same, calling observe(k, zeros, ones, merged) after every pass.
template <sortable_int T, class Observer>
void sort_same_sign(std::span<T> a, sort_options opts, Observer&& observe) {
    detail::sort_same_sign_impl(a, detail::self_key{}, opts, std::forward<Observer>(observe));
}

/// Full in-place sort: stable split into negatives and nonnegatives,
/// same-sign sort of each group, negatives first in the result.
template <sortable_int T>
void bitwise_sort(std::span<T> a, sort_options opts = {}) {
    detail::bitwise_sort_impl(a, detail::self_key{}, opts);
}

/// Copying convenience wrapper around bitwise_sort.
template <sortable_int T>
std::vector<T> bitwise_sorted(std::vector<T> a, sort_options opts = {}) {
    bitwise_sort(std::span<T>(a), opts);
    return a;
}

/// Stable sort of records by key; every partition pass is stable, so
/// records with equal keys keep their input order.
template <sortable_int T>
void bitwise_sort_by_key(std::span<keyed_record<T>> records, sort_options opts = {}) {
    detail::bitwise_sort_impl(records, detail::record_key{}, opts);
}

}  // namespace bws
