#pragma once

// Pass-by-pass rendering of the sort on small inputs: the sign split,
// each partition's buckets, and every intermediate array as bits.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitops.hpp"
#include "bitsort.hpp"

namespace bws {

inline constexpr std::size_t trace_element_limit = 64;

namespace detail {

template <sortable_int T>
std::string to_decimal(T v) {
    if constexpr (std::is_signed_v<T>)
        return std::to_string(static_cast<long long>(v));
    else
        return std::to_string(static_cast<unsigned long long>(v));
}

template <sortable_int T>
void append_list(std::string& out, std::span<const T> xs) {
    out += '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ' ';
        out += to_decimal(xs[i]);
    }
    out += ']';
}

template <sortable_int T>
void append_bits(std::string& out, std::span<const T> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += i > 0 ? " " : "";
        out += bin_repr(xs[i]);
    }
}

template <sortable_int T>
void trace_group(std::string& out, const char* label, std::vector<T>& group) {
    out += "group ";
    out += label;
    if (group.empty()) {
        out += ": empty\n";
        return;
    }
    out += ": n=" + std::to_string(group.size()) + ", passes=" +
           std::to_string(pass_count<T>) + "\n";
    sort_same_sign(std::span<T>(group), {},
                   [&](unsigned k, std::span<const T> zeros, std::span<const T> ones,
                       std::span<const T> merged) {
                       out += "pass " + std::to_string(k) + ": A0=";
                       append_list(out, zeros);
                       out += " A1=";
                       append_list(out, ones);
                       out += " -> ";
                       append_list(out, merged);
                       out += "\n  bits: ";
                       append_bits(out, merged);
                       out += '\n';
                   });
}

}  // namespace detail

/// Renders the full sort of a small input as text. Inputs beyond
/// trace_element_limit are rejected; this is an inspection tool.
template <sortable_int T>
std::string trace_sort(std::span<const T> input) {
    if (input.size() > trace_element_limit)
        throw std::out_of_range("trace: " + std::to_string(input.size()) +
                                " elements exceed the trace limit of " +
                                std::to_string(trace_element_limit) +
                                "; use the sort command for bulk data");
    std::string out = "trace: width=" + std::to_string(bit_width_of<T>) +
                      (std::is_signed_v<T> ? " signed" : " unsigned") +
                      " n=" + std::to_string(input.size()) + '\n';
    out += "input: ";
    detail::append_list(out, input);
    out += '\n';

    std::vector<T> sorted;
    sorted.reserve(input.size());
    if (!input.empty()) {
        if constexpr (std::is_signed_v<T>) {
            std::vector<T> negatives, nonnegatives;
            for (const T v : input) (v < 0 ? negatives : nonnegatives).push_back(v);
            out += "split: negatives=";
            detail::append_list(out, std::span<const T>(negatives));
            out += " nonnegatives=";
            detail::append_list(out, std::span<const T>(nonnegatives));
            out += '\n';
            detail::trace_group(out, "negatives", negatives);
            detail::trace_group(out, "nonnegatives", nonnegatives);
            sorted.insert(sorted.end(), negatives.begin(), negatives.end());
            sorted.insert(sorted.end(), nonnegatives.begin(), nonnegatives.end());
        } else {
            std::vector<T> all(input.begin(), input.end());
            detail::trace_group(out, "all", all);
            sorted = std::move(all);
        }
    }
    out += "sorted: ";
    detail::append_list(out, std::span<const T>(sorted));
    out += '\n';
    return out;
}

}  // namespace bws
