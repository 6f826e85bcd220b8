#include "bench.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>

#include "dispatch.hpp"

namespace bws {

namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw config_error(std::string("invalid ") + what + " '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split_csv(std::string_view csv) {
    std::vector<std::string_view> out;
    while (!csv.empty()) {
        const auto comma = csv.find(',');
        out.push_back(csv.substr(0, comma));
        if (comma == std::string_view::npos) break;
        csv.remove_prefix(comma + 1);
    }
    return out;
}

// Largest key span the distribution can produce at the given width.
std::uint64_t worst_case_span(const distribution_spec& dist, unsigned width) {
    switch (dist.kind) {
        case distribution_kind::uniform_small_range: return dist.span;
        case distribution_kind::constant: return 1;
        default: return width >= 64 ? UINT64_MAX : (std::uint64_t{1} << width);
    }
}

}  // namespace

algorithm_spec algorithm_spec::parse(std::string_view token) {
    algorithm_spec spec;
    std::string_view name = token;
    std::string_view range;
    if (const auto colon = token.find(':'); colon != std::string_view::npos) {
        name = token.substr(0, colon);
        range = token.substr(colon + 1);
    }
    const auto id = algorithm_from_name(name);
    if (!id) throw config_error("unknown algorithm '" + std::string(name) + "'");
    spec.id = *id;
    if (spec.id == algorithm_id::insertion) spec.max_n = insertion_default_size_cap;

    if (!range.empty()) {
        const auto dash = range.find('-');
        if (dash == std::string_view::npos)
            throw config_error("invalid size range '" + std::string(range) +
                               "' (expected min-max)");
        const auto min_text = range.substr(0, dash);
        const auto max_text = range.substr(dash + 1);
        if (!min_text.empty()) spec.min_n = parse_u64(min_text, "size bound");
        if (!max_text.empty()) spec.max_n = parse_u64(max_text, "size bound");
        if (spec.min_n > spec.max_n)
            throw config_error("empty size range '" + std::string(range) + "'");
    }
    return spec;
}

std::vector<algorithm_spec> bench_config::parse_algorithms(std::string_view csv) {
    std::vector<algorithm_spec> out;
    for (const auto token : split_csv(csv)) out.push_back(algorithm_spec::parse(token));
    if (out.empty()) throw config_error("no algorithms given");
    return out;
}

std::vector<std::uint64_t> bench_config::parse_sizes(std::string_view csv) {
    std::vector<std::uint64_t> out;
    for (const auto token : split_csv(csv)) out.push_back(parse_u64(token, "size"));
    if (out.empty()) throw config_error("no sizes given");
    return out;
}

void bench_config::validate() const {
    if (sizes.empty()) throw config_error("no sizes configured");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw config_error("sizes must be at least 1");
        if (i > 0 && sizes[i] <= sizes[i - 1])
            throw config_error("sizes must be strictly increasing");
    }
    if (trials < 3) throw config_error("at least 3 trials required, got " + std::to_string(trials));
    if (widths.empty()) throw config_error("no widths configured");
    for (const unsigned w : widths) {
        if (w != 8 && w != 16 && w != 32 && w != 64)
            throw config_error("unsupported width " + std::to_string(w));
    }
    if (algorithms.empty()) throw config_error("no algorithms configured");

    for (const algorithm_spec& alg : algorithms) {
        if (alg.id != algorithm_id::counting) continue;
        for (const unsigned w : widths) {
            const std::uint64_t span = worst_case_span(distribution, w);
            if (span > counting_sort_max_range_default)
                throw config_error(
                    "counting sort with distribution '" + distribution.name() + "' at width " +
                    std::to_string(w) + " could span " + std::to_string(span) +
                    " keys; pair it with uniform_small_range or constant");
        }
    }
}

void bench_config::validate_for_fit() const {
    validate();
    for (const algorithm_spec& alg : algorithms) {
        std::size_t usable = 0;
        for (const std::uint64_t n : sizes)
            if (n >= alg.min_n && n <= alg.max_n) ++usable;
        if (usable < 4)
            throw config_error("slope fit needs at least 4 sizes for algorithm '" +
                               std::string(algorithm_name(alg.id)) + "', got " +
                               std::to_string(usable));
    }
}

std::vector<bench_record> run_bench(const bench_config& config) {
    config.validate();
    std::vector<bench_record> records;

    // strictly sequential: one thread, one sort at a time
    for (const algorithm_spec& alg : config.algorithms) {
        for (const unsigned width : config.widths) {
            detail::with_width(width, config.is_unsigned, [&](auto tag) {
                using T = typename decltype(tag)::type;
                for (const std::uint64_t n : config.sizes) {
                    if (n < alg.min_n || n > alg.max_n) continue;
                    for (std::uint32_t trial = 0; trial < config.trials; ++trial) {
                        std::vector<T> data = generate_input<T>(
                            static_cast<std::size_t>(n), config.distribution, config.seed, trial);

                        const auto start = std::chrono::steady_clock::now();
                        detail::run_algorithm(alg.id, std::span<T>(data));
                        const auto stop = std::chrono::steady_clock::now();

                        check_sorted_output<T>(alg.id, std::span<const T>(data));
                        const auto ns = std::max<std::int64_t>(
                            1, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                                   .count());
                        records.push_back({alg.id, width, n, config.seed, trial,
                                           static_cast<std::uint64_t>(ns),
                                           static_cast<double>(ns) / static_cast<double>(n)});
                    }
                }
            });
        }
    }
    return records;
}

std::vector<scaling_report> fit_scaling(std::span<const bench_record> records) {
    std::vector<algorithm_id> order;
    std::map<algorithm_id, std::map<std::uint64_t, std::vector<std::uint64_t>>> samples;
    for (const bench_record& r : records) {
        if (samples.find(r.algorithm) == samples.end()) order.push_back(r.algorithm);
        samples[r.algorithm][r.n].push_back(r.elapsed_ns);
    }

    std::vector<scaling_report> reports;
    for (const algorithm_id id : order) {
        auto& by_n = samples[id];
        if (by_n.size() < 4)
            throw config_error("slope fit needs at least 4 distinct sizes for algorithm '" +
                               std::string(algorithm_name(id)) + "', got " +
                               std::to_string(by_n.size()));

        scaling_report report{id, 0.0, 0.0, {}};
        for (auto& [n, elapsed] : by_n) {
            std::sort(elapsed.begin(), elapsed.end());
            const std::size_t m = elapsed.size();
            const double median =
                (m % 2 != 0) ? static_cast<double>(elapsed[m / 2])
                             : (static_cast<double>(elapsed[m / 2 - 1]) +
                                static_cast<double>(elapsed[m / 2])) / 2.0;
            report.points.push_back({n, median});
        }

        // least squares of y = log(median) against x = log(n)
        const double m = static_cast<double>(report.points.size());
        double sx = 0, sy = 0;
        for (const scaling_point& p : report.points) {
            sx += std::log(static_cast<double>(p.n));
            sy += std::log(p.median_elapsed_ns);
        }
        const double mean_x = sx / m, mean_y = sy / m;
        double sxx = 0, sxy = 0;
        for (const scaling_point& p : report.points) {
            const double dx = std::log(static_cast<double>(p.n)) - mean_x;
            const double dy = std::log(p.median_elapsed_ns) - mean_y;
            sxx += dx * dx;
            sxy += dx * dy;
        }
        report.slope = sxy / sxx;
        const double intercept = mean_y - report.slope * mean_x;
        double sq_err = 0;
        for (const scaling_point& p : report.points) {
            const double predicted =
                intercept + report.slope * std::log(static_cast<double>(p.n));
            const double err = std::log(p.median_elapsed_ns) - predicted;
            sq_err += err * err;
        }
        report.residual = std::sqrt(sq_err / m);
        reports.push_back(std::move(report));
    }
    return reports;
}

std::string records_csv(std::span<const bench_record> records) {
    std::string out = "algorithm,width,n,seed,trial,elapsed_ns,ns_per_element\n";
    char line[192];
    for (const bench_record& r : records) {
        std::snprintf(line, sizeof line, "%s,%u,%llu,%llu,%u,%llu,%.3f\n",
                      std::string(algorithm_name(r.algorithm)).c_str(), r.width,
                      static_cast<unsigned long long>(r.n),
                      static_cast<unsigned long long>(r.seed), r.trial,
                      static_cast<unsigned long long>(r.elapsed_ns), r.ns_per_element);
        out += line;
    }
    return out;
}

std::string reports_csv(std::span<const scaling_report> reports) {
    std::string out = "algorithm,slope,residual\n";
    char line[128];
    for (const scaling_report& r : reports) {
        std::snprintf(line, sizeof line, "%s,%.6f,%.6f\n",
                      std::string(algorithm_name(r.algorithm)).c_str(), r.slope, r.residual);
        out += line;
    }
    return out;
}

std::string reports_markdown(std::span<const scaling_report> reports) {
    std::string out = "| algorithm | slope | residual | sizes |\n|---|---:|---:|---:|\n";
    char line[160];
    for (const scaling_report& r : reports) {
        std::snprintf(line, sizeof line, "| %s | %.4f | %.4f | %zu |\n",
                      std::string(algorithm_name(r.algorithm)).c_str(), r.slope, r.residual,
                      r.points.size());
        out += line;
    }
    return out;
}

}  // namespace bws
