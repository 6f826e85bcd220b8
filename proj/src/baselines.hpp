#pragma once

// Classical comparison sorts used as correctness oracles and as
// complexity baselines next to the bitwise sort.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bitops.hpp"

namespace bws {

enum class algorithm_id { bitwise, bitwise_skip_empty, insertion, merge, counting, platform };

constexpr std::string_view algorithm_name(algorithm_id id) {
    switch (id) {
        case algorithm_id::bitwise: return "bitwise";
        case algorithm_id::bitwise_skip_empty: return "bitwise_skip_empty";
        case algorithm_id::insertion: return "insertion";
        case algorithm_id::merge: return "merge";
        case algorithm_id::counting: return "counting";
        case algorithm_id::platform: return "platform";
    }
    return "unknown";
}

inline std::optional<algorithm_id> algorithm_from_name(std::string_view name) {
    for (algorithm_id id : {algorithm_id::bitwise, algorithm_id::bitwise_skip_empty,
                            algorithm_id::insertion, algorithm_id::merge, algorithm_id::counting,
                            algorithm_id::platform}) {
        if (algorithm_name(id) == name) return id;
    }
    return std::nullopt;
}

struct baseline_stats {
    std::uint64_t comparisons = 0;
    std::uint64_t table_entries = 0;  // counting_sort table size == key span
};

template <class T, class Less = std::less<T>>
void insertion_sort(std::span<T> a, Less less = {}, baseline_stats* stats = nullptr) {
    for (std::size_t r = 1; r < a.size(); ++r) {
        T elem = std::move(a[r]);
        std::size_t l = r;
        while (l > 0) {
            if (stats) ++stats->comparisons;
            if (!less(elem, a[l - 1])) break;
            a[l] = std::move(a[l - 1]);
            --l;
        }
        a[l] = std::move(elem);
    }
}

// Bottom-up merge sort, stable, one scratch buffer. Comparisons stay
// under n per doubling level, so at most n*ceil(log2 n) in total.
template <class T, class Less = std::less<T>>
void merge_sort(std::span<T> a, Less less = {}, baseline_stats* stats = nullptr) {
    const std::size_t n = a.size();
    if (n < 2) return;
    std::vector<T> scratch(a.begin(), a.end());
    T* src = a.data();
    T* dst = scratch.data();
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo < n; lo += 2 * width) {
            const std::size_t mid = std::min(lo + width, n);
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t i = lo, j = mid, k = lo;
            while (i < mid && j < hi) {
                if (stats) ++stats->comparisons;
                // take from the left run unless the right is strictly smaller
                if (less(src[j], src[i]))
                    dst[k++] = src[j++];
                else
                    dst[k++] = src[i++];
            }
            while (i < mid) dst[k++] = src[i++];
            while (j < hi) dst[k++] = src[j++];
        }
        std::swap(src, dst);
    }
    if (src != a.data()) std::copy(src, src + n, a.data());
}

inline constexpr std::uint64_t counting_sort_max_range_default = std::uint64_t{1} << 26;

/// Offset counting sort. The count table covers exactly max-min+1 keys;
/// a span beyond max_range is rejected rather than allocated.
template <sortable_int T>
void counting_sort(std::span<T> a, std::uint64_t max_range = counting_sort_max_range_default,
                   baseline_stats* stats = nullptr) {
    if (a.empty()) return;
    const auto [mn, mx] = std::minmax_element(a.begin(), a.end());
    const auto lo = detail::to_unsigned(*mn);
    const auto diff = static_cast<std::uint64_t>(
        static_cast<detail::unsigned_t<T>>(detail::to_unsigned(*mx) - lo));
    if (diff >= max_range) {
        throw std::out_of_range("counting_sort: key span " + std::to_string(diff) +
                                "+1 exceeds the limit of " + std::to_string(max_range) + " keys");
    }
    std::vector<std::size_t> counts(static_cast<std::size_t>(diff) + 1, 0);
    for (const T& v : a)
        ++counts[static_cast<std::size_t>(
            static_cast<detail::unsigned_t<T>>(detail::to_unsigned(v) - lo))];
    std::size_t i = 0;
    for (std::size_t off = 0; off < counts.size(); ++off) {
        const T value = static_cast<T>(
            static_cast<detail::unsigned_t<T>>(lo + static_cast<detail::unsigned_t<T>>(off)));
        for (std::size_t c = 0; c < counts[off]; ++c) a[i++] = value;
    }
    if (stats) stats->table_entries = counts.size();
}

/// Host standard-library sort, kept as an independent oracle.
template <class T, class Less = std::less<T>>
void platform_sort(std::span<T> a, Less less = {}) {
    std::sort(a.begin(), a.end(), less);
}

}  // namespace bws
