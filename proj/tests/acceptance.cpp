// Acceptance suite: exercises the library's central claims end to end
// and prints one pass/fail line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "baselines.hpp"
#include "bench.hpp"
#include "bitops.hpp"
#include "bitsort.hpp"
#include "generator.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

struct outcome {
    bool pass;
    std::string detail;
};

char scratch[512];

std::string format(const char* fmt, auto... args) {
    std::snprintf(scratch, sizeof scratch, fmt, args...);
    return scratch;
}

// 1. bitwise_sort equals merge_sort on every sequence of length <= 4
//    over {-4..4} at width 8.
outcome exhaustive_oracle_equivalence() {
    const std::vector<std::int8_t> domain{-4, -3, -2, -1, 0, 1, 2, 3, 4};
    std::uint64_t cases = 0, mismatches = 0;
    for (std::size_t len = 0; len <= 4; ++len) {
        std::vector<std::size_t> idx(len, 0);
        while (true) {
            std::vector<std::int8_t> input(len);
            for (std::size_t i = 0; i < len; ++i) input[i] = domain[idx[i]];

            auto expected = input;
            bws::merge_sort(std::span<std::int8_t>(expected));
            auto actual = input;
            bws::bitwise_sort(std::span<std::int8_t>(actual));
            ++cases;
            if (actual != expected) ++mismatches;

            std::size_t pos = 0;
            while (pos < len && ++idx[pos] == domain.size()) idx[pos++] = 0;
            if (pos == len) break;
        }
    }
    return {mismatches == 0,
            format("exhaustive oracle equivalence, %llu cases, %llu mismatches",
                   static_cast<unsigned long long>(cases),
                   static_cast<unsigned long long>(mismatches))};
}

// 2. 10,000 seeded random arrays per (width x signedness x n), bitwise
//    against the platform sort.
outcome randomized_oracle_equivalence() {
    std::uint64_t cases = 0, mismatches = 0;
    auto run_type = [&]<class T>() {
        const bws::distribution_spec dist{};
        for (const std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{100},
                                    std::size_t{1000}}) {
            for (std::uint32_t trial = 0; trial < 10000; ++trial) {
                auto actual = bws::generate_input<T>(n, dist, 1337, trial);
                auto expected = actual;
                bws::platform_sort(std::span<T>(expected));
                bws::bitwise_sort(std::span<T>(actual));
                ++cases;
                if (actual != expected) ++mismatches;
            }
        }
    };
    run_type.operator()<std::int8_t>();
    run_type.operator()<std::uint8_t>();
    run_type.operator()<std::int16_t>();
    run_type.operator()<std::uint16_t>();
    run_type.operator()<std::int32_t>();
    run_type.operator()<std::uint32_t>();
    run_type.operator()<std::int64_t>();
    run_type.operator()<std::uint64_t>();
    return {mismatches == 0,
            format("randomized oracle equivalence, %llu arrays, %llu mismatches",
                   static_cast<unsigned long long>(cases),
                   static_cast<unsigned long long>(mismatches))};
}

// 3. After pass s of the same-sign sort, the low s+1 bits read as
//    unsigned are non-decreasing.
outcome per_pass_prefix_invariant() {
    std::uint64_t arrays = 0, violations = 0;
    const bws::distribution_spec dist{};
    for (std::uint32_t trial = 0; trial < 1000; ++trial) {
        auto values = bws::generate_input<std::int16_t>(256, dist, 7331, trial);
        const bool negative = trial % 2 == 0;
        for (auto& v : values)
            v = negative ? static_cast<std::int16_t>(v | 0x8000)
                         : static_cast<std::int16_t>(v & 0x7fff);
        ++arrays;
        bws::sort_same_sign(
            std::span<std::int16_t>(values), {},
            [&](unsigned k, std::span<const std::int16_t>, std::span<const std::int16_t>,
                std::span<const std::int16_t> merged) {
                const auto mask = static_cast<std::uint16_t>((1u << (k + 1)) - 1);
                for (std::size_t i = 1; i < merged.size(); ++i) {
                    const auto prev = static_cast<std::uint16_t>(merged[i - 1]) & mask;
                    const auto cur = static_cast<std::uint16_t>(merged[i]) & mask;
                    if (prev > cur) ++violations;
                }
            });
    }
    return {violations == 0,
            format("per-pass prefix invariant, %llu same-sign arrays, %llu violations",
                   static_cast<unsigned long long>(arrays),
                   static_cast<unsigned long long>(violations))};
}

// 4. The 14 representable golden rows of the 16-bit representation table.
outcome golden_vectors() {
    const std::pair<std::int16_t, const char*> rows[] = {
        {0, "0000000000000000"},      {1, "0000000000000001"},
        {-1, "1111111111111111"},     {2, "0000000000000010"},
        {-2, "1111111111111110"},     {16, "0000000000010000"},
        {-16, "1111111111110000"},    {26, "0000000000011010"},
        {-26, "1111111111100110"},    {41, "0000000000101001"},
        {-41, "1111111111010111"},    {32767, "0111111111111111"},
        {-32767, "1000000000000001"}, {-32768, "1000000000000000"},
    };
    int matches = 0;
    for (const auto& [value, image] : rows)
        if (bws::bin_repr(value) == image) ++matches;
    return {matches == 14, format("golden representation vectors, %d/14 exact matches", matches)};
}

// 5. Fitted scaling exponents at desk scale: bitwise near 1, insertion
//    near 2, merge near 1 with a log factor.
outcome empirical_exponents() {
    bws::bench_config config;
    config.sizes = {1024, 2048, 4096, 8192, 16384, 32768, 65536, 131072, 262144, 524288, 1048576};
    config.trials = 5;
    config.seed = 42;
    config.widths = {32};
    config.algorithms = bws::bench_config::parse_algorithms(
        "bitwise:16384-1048576,insertion:1024-16384,merge:16384-1048576");
    config.validate_for_fit();

    const auto records = bws::run_bench(config);
    const auto reports = bws::fit_scaling(records);

    double bitwise_slope = 0, insertion_slope = 0, merge_slope = 0;
    for (const auto& report : reports) {
        if (report.algorithm == bws::algorithm_id::bitwise) bitwise_slope = report.slope;
        if (report.algorithm == bws::algorithm_id::insertion) insertion_slope = report.slope;
        if (report.algorithm == bws::algorithm_id::merge) merge_slope = report.slope;
    }
    const bool pass = bitwise_slope >= 0.85 && bitwise_slope <= 1.15 &&
                      insertion_slope >= 1.8 && insertion_slope <= 2.2 &&
                      merge_slope >= 0.95 && merge_slope <= 1.35;
    return {pass, format("empirical exponents: bitwise %.3f (want 0.85..1.15), insertion %.3f "
                         "(want 1.8..2.2), merge %.3f (want 0.95..1.35)",
                         bitwise_slope, insertion_slope, merge_slope)};
}

// 6. The same-sign sort always runs exactly B passes, and a full sort
//    moves at most (2t+2)*n elements.
outcome pass_and_move_witness() {
    std::uint64_t checks = 0, failures = 0;
    const bws::distribution_spec dist{};

    auto check_passes = [&]<class T>() {
        constexpr unsigned expected = bws::pass_count<T>;
        for (const std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{257}}) {
            auto values = bws::generate_input<T>(n, dist, 99, static_cast<std::uint32_t>(n));
            if constexpr (std::is_signed_v<T>)
                for (auto& v : values) v = static_cast<T>(bws::detail::magnitude(v) >> 1);
            bws::sort_stats stats;
            bws::sort_same_sign(std::span<T>(values), {.stats = &stats});
            ++checks;
            if (stats.partition_passes != expected) ++failures;
        }
    };
    check_passes.operator()<std::int8_t>();
    check_passes.operator()<std::uint8_t>();
    check_passes.operator()<std::int16_t>();
    check_passes.operator()<std::uint16_t>();
    check_passes.operator()<std::int32_t>();
    check_passes.operator()<std::uint32_t>();
    check_passes.operator()<std::int64_t>();
    check_passes.operator()<std::uint64_t>();

    auto check_moves = [&]<class T>() {
        for (std::uint32_t trial = 0; trial < 25; ++trial) {
            const std::size_t n = 1 + (bws::mix64(trial, 5) % 4096);
            auto values = bws::generate_input<T>(n, dist, 17, trial);
            bws::sort_stats stats;
            bws::bitwise_sort(std::span<T>(values), {.stats = &stats});
            const std::uint64_t bound =
                (2ull * bws::bit_width_of<T> + 2) * static_cast<std::uint64_t>(n);
            ++checks;
            if (stats.element_moves > bound) ++failures;
        }
    };
    check_moves.operator()<std::int8_t>();
    check_moves.operator()<std::int16_t>();
    check_moves.operator()<std::int32_t>();
    check_moves.operator()<std::int64_t>();

    return {failures == 0, format("pass/move witness, %llu checks, %llu failures",
                                  static_cast<unsigned long long>(checks),
                                  static_cast<unsigned long long>(failures))};
}

// 7. Keyed sort order equals the stable merge-sort oracle on
//    duplicate-heavy keys.
outcome stability_witness() {
    std::uint64_t arrays = 0, violations = 0;
    for (std::uint32_t trial = 0; trial < 1000; ++trial) {
        bws::splitmix64 rng{bws::mix64(2024, trial)};
        std::vector<bws::keyed_record<std::int32_t>> records(512);
        for (std::size_t i = 0; i < records.size(); ++i)
            records[i] = {static_cast<std::int32_t>(rng.next() % 8), i};

        auto expected = records;
        bws::merge_sort(std::span<bws::keyed_record<std::int32_t>>(expected),
                        [](const auto& a, const auto& b) { return a.key < b.key; });
        bws::bitwise_sort_by_key(std::span<bws::keyed_record<std::int32_t>>(records));
        ++arrays;
        if (records != expected) ++violations;
    }
    return {violations == 0,
            format("stability vs stable oracle, %llu record arrays, %llu order violations",
                   static_cast<unsigned long long>(arrays),
                   static_cast<unsigned long long>(violations))};
}

// 8. The slope fit recovers exact synthetic power laws.
outcome fit_self_test() {
    auto synthesize = [](double exponent, bws::algorithm_id id) {
        std::vector<bws::bench_record> records;
        for (const std::uint64_t n : {1024ull, 4096ull, 16384ull, 65536ull, 262144ull}) {
            for (std::uint32_t trial = 0; trial < 3; ++trial) {
                const auto elapsed = static_cast<std::uint64_t>(
                    25.0 * std::pow(static_cast<double>(n), exponent));
                records.push_back({id, 32, n, 1, trial, elapsed,
                                   static_cast<double>(elapsed) / static_cast<double>(n)});
            }
        }
        return records;
    };
    auto records = synthesize(1.0, bws::algorithm_id::bitwise);
    const auto quadratic = synthesize(2.0, bws::algorithm_id::insertion);
    records.insert(records.end(), quadratic.begin(), quadratic.end());

    const auto reports = bws::fit_scaling(records);
    const double err1 = std::abs(reports[0].slope - 1.0);
    const double err2 = std::abs(reports[1].slope - 2.0);
    return {err1 < 1e-6 && err2 < 1e-6,
            format("fit self-test, exponent errors %.2e and %.2e (want < 1e-6)", err1, err2)};
}

}  // namespace

int main() {
    struct criterion {
        const char* name;
        outcome (*run)();
        double budget_seconds;
    };
    const criterion criteria[] = {
        {"oracle equivalence, exhaustive", exhaustive_oracle_equivalence, 10.0},
        {"oracle equivalence, randomized", randomized_oracle_equivalence, 60.0},
        {"per-pass prefix invariant", per_pass_prefix_invariant, 60.0},
        {"golden representation vectors", golden_vectors, 10.0},
        {"empirical scaling exponents", empirical_exponents, 300.0},
        {"pass-count and move witness", pass_and_move_witness, 60.0},
        {"stability", stability_witness, 60.0},
        {"fit_scaling self-test", fit_self_test, 10.0},
    };

    int failures = 0;
    int index = 0;
    for (const criterion& c : criteria) {
        ++index;
        const auto start = clock_type::now();
        outcome result = c.run();
        const double seconds =
            std::chrono::duration<double>(clock_type::now() - start).count();
        if (seconds > c.budget_seconds) {
            result.pass = false;
            result.detail += format(" [exceeded %.0f s budget]", c.budget_seconds);
        }
        if (!result.pass) ++failures;
        std::printf("[%s] criterion %d: %s (%.1f s)\n", result.pass ? "PASS" : "FAIL", index,
                    result.detail.c_str(), seconds);
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("acceptance: all %d criteria passed\n",
                    static_cast<int>(std::size(criteria)));
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
