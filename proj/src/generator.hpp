#pragma once

// Deterministic benchmark inputs. splitmix64 is tiny and fully
// specified, so the same configuration draws the same sequences on any
// platform or implementation.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bitops.hpp"
#include "errors.hpp"

namespace bws {

struct splitmix64 {
    std::uint64_t state = 0;

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

/// One splitmix64 step over h ^ v; chained to derive per-case stream seeds.
constexpr std::uint64_t mix64(std::uint64_t h, std::uint64_t v) noexcept {
    splitmix64 s{h ^ v};
    return s.next();
}

enum class distribution_kind { uniform_full_range, uniform_small_range, sorted, reverse_sorted, constant };

struct distribution_spec {
    distribution_kind kind = distribution_kind::uniform_full_range;
    std::uint64_t span = 1024;  // uniform_small_range only

    // Accepts a kind name, with an optional ":<span>" suffix for
    // uniform_small_range. Unknown names are configuration errors.
    static distribution_spec parse(std::string_view text) {
        distribution_spec spec;
        std::string_view name = text;
        if (const auto colon = text.find(':'); colon != std::string_view::npos) {
            name = text.substr(0, colon);
            const std::string span_text(text.substr(colon + 1));
            char* end = nullptr;
            const unsigned long long parsed = std::strtoull(span_text.c_str(), &end, 10);
            if (span_text.empty() || end == nullptr || *end != '\0' || parsed == 0)
                throw config_error("invalid distribution span '" + span_text + "'");
            spec.span = parsed;
        }
        if (name == "uniform_full_range")
            spec.kind = distribution_kind::uniform_full_range;
        else if (name == "uniform_small_range")
            spec.kind = distribution_kind::uniform_small_range;
        else if (name == "sorted")
            spec.kind = distribution_kind::sorted;
        else if (name == "reverse_sorted")
            spec.kind = distribution_kind::reverse_sorted;
        else if (name == "constant")
            spec.kind = distribution_kind::constant;
        else
            throw config_error("unknown distribution '" + std::string(name) + "'");
        if (spec.kind != distribution_kind::uniform_small_range && name != text)
            throw config_error("distribution '" + std::string(name) + "' takes no span");
        return spec;
    }

    std::string name() const {
        switch (kind) {
            case distribution_kind::uniform_full_range: return "uniform_full_range";
            case distribution_kind::uniform_small_range:
                return "uniform_small_range:" + std::to_string(span);
            case distribution_kind::sorted: return "sorted";
            case distribution_kind::reverse_sorted: return "reverse_sorted";
            case distribution_kind::constant: return "constant";
        }
        return "unknown";
    }
};

/// Deterministic sequence for one benchmark case. The stream identity is
/// (seed, width, n, trial); the distribution is deliberately not hashed,
/// so e.g. `sorted` is a permutation of the full-range draw.
template <sortable_int T>
std::vector<T> generate_input(std::size_t n, const distribution_spec& dist, std::uint64_t seed,
                              std::uint32_t trial) {
    constexpr unsigned width = bit_width_of<T>;
    splitmix64 rng{mix64(mix64(mix64(seed, width), n), trial)};
    std::vector<T> out(n);

    switch (dist.kind) {
        case distribution_kind::uniform_full_range:
        case distribution_kind::sorted:
        case distribution_kind::reverse_sorted:
            for (T& v : out) v = static_cast<T>(rng.next());
            break;
        case distribution_kind::uniform_small_range: {
            if constexpr (width < 64) {
                if (dist.span > (std::uint64_t{1} << width))
                    throw config_error("distribution span " + std::to_string(dist.span) +
                                       " does not fit a " + std::to_string(width) +
                                       "-bit element");
            }
            if constexpr (std::is_signed_v<T>) {
                // centered on zero so both sign groups see traffic;
                // modular math, truncated to the element width
                const std::uint64_t lo = 0ull - dist.span / 2;
                for (T& v : out)
                    v = static_cast<T>(static_cast<detail::unsigned_t<T>>(lo + rng.next() % dist.span));
            } else {
                for (T& v : out) v = static_cast<T>(rng.next() % dist.span);
            }
            break;
        }
        case distribution_kind::constant: {
            const T value = static_cast<T>(rng.next());
            std::fill(out.begin(), out.end(), value);
            break;
        }
    }
    if (dist.kind == distribution_kind::sorted) std::sort(out.begin(), out.end());
    if (dist.kind == distribution_kind::reverse_sorted)
        std::sort(out.begin(), out.end(), std::greater<T>{});
    return out;
}

}  // namespace bws
