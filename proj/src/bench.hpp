#pragma once

// Timing harness: seeded inputs over a ladder of sizes, medians over
// trials, and a least-squares exponent fit of log(time) against log(n).

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "baselines.hpp"
#include "errors.hpp"
#include "generator.hpp"

namespace bws {

// Insertion sort gets a default ceiling so a mixed ladder stays under a
// desk-scale time budget.
inline constexpr std::uint64_t insertion_default_size_cap = std::uint64_t{1} << 16;

struct algorithm_spec {
    algorithm_id id = algorithm_id::bitwise;
    std::uint64_t min_n = 1;
    std::uint64_t max_n = UINT64_MAX;

    // "name" or "name:min-max" (either bound may be omitted).
    static algorithm_spec parse(std::string_view token);
};

struct bench_config {
    std::vector<std::uint64_t> sizes;
    std::uint32_t trials = 5;
    std::uint64_t seed = 42;
    std::vector<unsigned> widths = {32};
    bool is_unsigned = false;
    distribution_spec distribution{};
    std::vector<algorithm_spec> algorithms;

    static std::vector<algorithm_spec> parse_algorithms(std::string_view csv);
    static std::vector<std::uint64_t> parse_sizes(std::string_view csv);

    // Structural checks: ladder shape, trials, widths, counting-sort
    // pairing with the distribution's worst-case span.
    void validate() const;
    // Additionally requires >= 4 sizes per algorithm after range
    // filtering, so a slope fit is possible. Called before long runs.
    void validate_for_fit() const;
};

struct bench_record {
    algorithm_id algorithm;
    unsigned width;
    std::uint64_t n;
    std::uint64_t seed;
    std::uint32_t trial;
    std::uint64_t elapsed_ns;
    double ns_per_element;
};

struct scaling_point {
    std::uint64_t n;
    double median_elapsed_ns;
};

struct scaling_report {
    algorithm_id algorithm;
    double slope;     // fitted exponent b in time ~ c * n^b
    double residual;  // RMS error of the fit in log space
    std::vector<scaling_point> points;
};

// One record per (algorithm, width, n, trial), sizes outside an
// algorithm's range skipped. Every timed output is verified sorted
// before its record is accepted; a failure aborts the whole run.
std::vector<bench_record> run_bench(const bench_config& config);

// Per-algorithm slope of log(median elapsed) over log(n). Requires at
// least 4 distinct sizes per algorithm.
std::vector<scaling_report> fit_scaling(std::span<const bench_record> records);

std::string records_csv(std::span<const bench_record> records);
std::string reports_csv(std::span<const scaling_report> reports);
std::string reports_markdown(std::span<const scaling_report> reports);

// run_bench's post-sort gate, exposed so the failure path is testable.
template <sortable_int T>
void check_sorted_output(algorithm_id id, std::span<const T> out) {
    if (!std::is_sorted(out.begin(), out.end()))
        throw integrity_error("integrity failure: algorithm '" +
                              std::string(algorithm_name(id)) + "' produced unsorted output");
}

}  // namespace bws
