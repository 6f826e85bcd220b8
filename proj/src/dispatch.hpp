#pragma once

// Maps a runtime (width, signedness, algorithm) selection onto the
// concrete element types and sort entry points.

#include <cstdint>
#include <span>
#include <string>
#include <type_traits>

#include "baselines.hpp"
#include "bitsort.hpp"
#include "errors.hpp"

namespace bws::detail {

template <class F>
void with_width(unsigned width, bool is_unsigned, F&& f) {
    switch (width) {
        case 8:
            if (is_unsigned) f(std::type_identity<std::uint8_t>{});
            else f(std::type_identity<std::int8_t>{});
            return;
        case 16:
            if (is_unsigned) f(std::type_identity<std::uint16_t>{});
            else f(std::type_identity<std::int16_t>{});
            return;
        case 32:
            if (is_unsigned) f(std::type_identity<std::uint32_t>{});
            else f(std::type_identity<std::int32_t>{});
            return;
        case 64:
            if (is_unsigned) f(std::type_identity<std::uint64_t>{});
            else f(std::type_identity<std::int64_t>{});
            return;
        default:
            throw config_error("unsupported width " + std::to_string(width) +
                               " (expected 8, 16, 32, or 64)");
    }
}

template <sortable_int T>
void run_algorithm(algorithm_id id, std::span<T> a) {
    switch (id) {
        case algorithm_id::bitwise: bitwise_sort(a); return;
        case algorithm_id::bitwise_skip_empty:
            bitwise_sort(a, sort_options{.skip_empty_bits = true});
            return;
        case algorithm_id::insertion: insertion_sort(a); return;
        case algorithm_id::merge: merge_sort(a); return;
        case algorithm_id::counting: counting_sort(a); return;
        case algorithm_id::platform: platform_sort(a); return;
    }
    throw config_error("unknown algorithm id");
}

}  // namespace bws::detail
