#include "bitsort/bitsort.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "bench.hpp"
#include "dispatch.hpp"
#include "trace.hpp"

namespace {

thread_local std::string g_last_error;

template <class F>
bws_status wrap(F&& body) {
    try {
        body();
        g_last_error.clear();
        return BWS_OK;
    } catch (const bws::config_error& e) {
        g_last_error = e.what();
        return BWS_ERROR_CONFIG;
    } catch (const bws::integrity_error& e) {
        g_last_error = e.what();
        return BWS_ERROR_INTEGRITY;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return BWS_ERROR_RANGE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return BWS_ERROR_DATA;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BWS_ERROR_INTERNAL;
    }
}

uint64_t truncate_to_width(uint64_t bits, uint32_t width) {
    return width >= 64 ? bits : bits & ((uint64_t{1} << width) - 1);
}

void require(bool ok, const char* message) {
    if (!ok) throw bws::config_error(message);
}

// the C enum mirrors bws::algorithm_id value for value
static_assert(static_cast<int>(bws::algorithm_id::bitwise) == BWS_ALG_BITWISE);
static_assert(static_cast<int>(bws::algorithm_id::bitwise_skip_empty) ==
              BWS_ALG_BITWISE_SKIP_EMPTY);
static_assert(static_cast<int>(bws::algorithm_id::insertion) == BWS_ALG_INSERTION);
static_assert(static_cast<int>(bws::algorithm_id::merge) == BWS_ALG_MERGE);
static_assert(static_cast<int>(bws::algorithm_id::counting) == BWS_ALG_COUNTING);
static_assert(static_cast<int>(bws::algorithm_id::platform) == BWS_ALG_PLATFORM);

bws::algorithm_id to_id(bws_algorithm algorithm) {
    switch (algorithm) {
        case BWS_ALG_BITWISE: return bws::algorithm_id::bitwise;
        case BWS_ALG_BITWISE_SKIP_EMPTY: return bws::algorithm_id::bitwise_skip_empty;
        case BWS_ALG_INSERTION: return bws::algorithm_id::insertion;
        case BWS_ALG_MERGE: return bws::algorithm_id::merge;
        case BWS_ALG_COUNTING: return bws::algorithm_id::counting;
        case BWS_ALG_PLATFORM: return bws::algorithm_id::platform;
    }
    throw bws::config_error("unknown algorithm id");
}

void copy_to_buffer(const std::string& text, char* buf, size_t buf_size) {
    require(buf != nullptr, "null output buffer");
    if (text.size() + 1 > buf_size)
        throw bws::config_error("output buffer too small: need " +
                                std::to_string(text.size() + 1) + " bytes, got " +
                                std::to_string(buf_size));
    std::memcpy(buf, text.c_str(), text.size() + 1);
}

}  // namespace

struct bws_bench_config {
    bws::bench_config cfg;
};

struct bws_bench_result {
    std::vector<bws::bench_record> records;
    std::vector<bws::scaling_report> reports;
    std::vector<std::string> report_names;
    std::string records_csv, slopes_csv, slopes_md;
};

extern "C" {

const char* bws_version(void) { return "1.0.0"; }

const char* bws_last_error(void) { return g_last_error.c_str(); }

bws_status bws_bit_value(uint64_t value_bits, uint32_t width, uint32_t bit, int32_t* out) {
    return wrap([&] {
        require(out != nullptr, "null output pointer");
        bws::detail::with_width(width, false, [&](auto tag) {
            using T = typename decltype(tag)::type;
            *out = bws::bit_value(static_cast<T>(truncate_to_width(value_bits, width)), bit);
        });
    });
}

bws_status bws_power2(uint32_t width, uint32_t n, uint64_t* out) {
    return wrap([&] {
        require(out != nullptr, "null output pointer");
        bws::detail::with_width(width, true, [&](auto tag) {
            using T = typename decltype(tag)::type;
            *out = static_cast<uint64_t>(bws::power2<T>(n));
        });
    });
}

bws_status bws_div_pow2(uint64_t value_bits, uint32_t width, int is_unsigned, uint32_t n,
                        uint64_t* out_bits) {
    return wrap([&] {
        require(out_bits != nullptr, "null output pointer");
        bws::detail::with_width(width, is_unsigned != 0, [&](auto tag) {
            using T = typename decltype(tag)::type;
            const T result = bws::div_pow2(static_cast<T>(truncate_to_width(value_bits, width)), n);
            *out_bits = static_cast<uint64_t>(bws::detail::to_unsigned(result));
        });
    });
}

bws_status bws_bin_repr(uint64_t value_bits, uint32_t width, char* buf, size_t buf_size) {
    return wrap([&] {
        bws::detail::with_width(width, false, [&](auto tag) {
            using T = typename decltype(tag)::type;
            copy_to_buffer(bws::bin_repr(static_cast<T>(truncate_to_width(value_bits, width))),
                           buf, buf_size);
        });
    });
}

bws_status bws_dec_to_bin(uint64_t value_bits, uint32_t width, int is_unsigned, char* buf,
                          size_t buf_size) {
    return wrap([&] {
        bws::detail::with_width(width, is_unsigned != 0, [&](auto tag) {
            using T = typename decltype(tag)::type;
            copy_to_buffer(bws::dec_to_bin(static_cast<T>(truncate_to_width(value_bits, width))),
                           buf, buf_size);
        });
    });
}

bws_status bws_popcount_abs(uint64_t value_bits, uint32_t width, int is_unsigned, uint32_t* out) {
    return wrap([&] {
        require(out != nullptr, "null output pointer");
        bws::detail::with_width(width, is_unsigned != 0, [&](auto tag) {
            using T = typename decltype(tag)::type;
            *out = static_cast<uint32_t>(
                bws::popcount_abs(static_cast<T>(truncate_to_width(value_bits, width))));
        });
    });
}

const char* bws_algorithm_name(bws_algorithm algorithm) {
    switch (algorithm) {
        case BWS_ALG_BITWISE: return "bitwise";
        case BWS_ALG_BITWISE_SKIP_EMPTY: return "bitwise_skip_empty";
        case BWS_ALG_INSERTION: return "insertion";
        case BWS_ALG_MERGE: return "merge";
        case BWS_ALG_COUNTING: return "counting";
        case BWS_ALG_PLATFORM: return "platform";
    }
    return "unknown";
}

bws_status bws_algorithm_from_name(const char* name, bws_algorithm* out) {
    return wrap([&] {
        require(name != nullptr, "null algorithm name");
        require(out != nullptr, "null output pointer");
        const auto id = bws::algorithm_from_name(name);
        if (!id) throw bws::config_error("unknown algorithm '" + std::string(name) + "'");
        *out = static_cast<bws_algorithm>(static_cast<int>(*id));
    });
}

bws_status bws_sort(void* data, size_t count, uint32_t width, int is_unsigned,
                    bws_algorithm algorithm) {
    return wrap([&] {
        if (count > 0 && data == nullptr)
            throw std::invalid_argument("null data with nonzero count");
        const bws::algorithm_id id = to_id(algorithm);
        bws::detail::with_width(width, is_unsigned != 0, [&](auto tag) {
            using T = typename decltype(tag)::type;
            bws::detail::run_algorithm(id, std::span<T>(static_cast<T*>(data), count));
        });
    });
}

bws_status bws_trace_text(const void* data, size_t count, uint32_t width, int is_unsigned,
                          char** out_text) {
    return wrap([&] {
        require(out_text != nullptr, "null output pointer");
        if (count > 0 && data == nullptr)
            throw std::invalid_argument("null data with nonzero count");
        std::string text;
        bws::detail::with_width(width, is_unsigned != 0, [&](auto tag) {
            using T = typename decltype(tag)::type;
            text = bws::trace_sort(std::span<const T>(static_cast<const T*>(data), count));
        });
        char* owned = static_cast<char*>(std::malloc(text.size() + 1));
        if (owned == nullptr) throw std::bad_alloc{};
        std::memcpy(owned, text.c_str(), text.size() + 1);
        *out_text = owned;
    });
}

void bws_text_free(char* text) { std::free(text); }

bws_bench_config* bws_bench_config_new(void) {
    auto* config = new (std::nothrow) bws_bench_config;
    if (config == nullptr) return nullptr;
    config->cfg.sizes = {16384, 32768, 65536, 131072, 262144, 524288, 1048576};
    config->cfg.algorithms = bws::bench_config::parse_algorithms("bitwise,merge,platform");
    return config;
}

void bws_bench_config_free(bws_bench_config* config) { delete config; }

bws_status bws_bench_config_set_sizes(bws_bench_config* config, const uint64_t* sizes,
                                      size_t count) {
    return wrap([&] {
        require(config != nullptr, "null config");
        require(sizes != nullptr || count == 0, "null sizes");
        config->cfg.sizes.assign(sizes, sizes + count);
    });
}

bws_status bws_bench_config_set_trials(bws_bench_config* config, uint32_t trials) {
    return wrap([&] {
        require(config != nullptr, "null config");
        config->cfg.trials = trials;
    });
}

bws_status bws_bench_config_set_seed(bws_bench_config* config, uint64_t seed) {
    return wrap([&] {
        require(config != nullptr, "null config");
        config->cfg.seed = seed;
    });
}

bws_status bws_bench_config_set_widths(bws_bench_config* config, const uint32_t* widths,
                                       size_t count) {
    return wrap([&] {
        require(config != nullptr, "null config");
        require(widths != nullptr || count == 0, "null widths");
        config->cfg.widths.assign(widths, widths + count);
    });
}

bws_status bws_bench_config_set_unsigned(bws_bench_config* config, int is_unsigned) {
    return wrap([&] {
        require(config != nullptr, "null config");
        config->cfg.is_unsigned = is_unsigned != 0;
    });
}

bws_status bws_bench_config_set_distribution(bws_bench_config* config, const char* name) {
    return wrap([&] {
        require(config != nullptr, "null config");
        require(name != nullptr, "null distribution name");
        config->cfg.distribution = bws::distribution_spec::parse(name);
    });
}

bws_status bws_bench_config_set_algorithms(bws_bench_config* config, const char* csv) {
    return wrap([&] {
        require(config != nullptr, "null config");
        require(csv != nullptr, "null algorithm list");
        config->cfg.algorithms = bws::bench_config::parse_algorithms(csv);
    });
}

bws_status bws_bench_run(const bws_bench_config* config, bws_bench_result** out) {
    return wrap([&] {
        require(config != nullptr, "null config");
        require(out != nullptr, "null output pointer");
        config->cfg.validate_for_fit();

        auto result = std::make_unique<bws_bench_result>();
        result->records = bws::run_bench(config->cfg);
        result->reports = bws::fit_scaling(result->records);
        for (const bws::scaling_report& r : result->reports)
            result->report_names.emplace_back(bws::algorithm_name(r.algorithm));
        result->records_csv = bws::records_csv(result->records);
        result->slopes_csv = bws::reports_csv(result->reports);
        result->slopes_md = bws::reports_markdown(result->reports);
        *out = result.release();
    });
}

void bws_bench_result_free(bws_bench_result* result) { delete result; }

const char* bws_bench_result_records_csv(const bws_bench_result* result) {
    return result ? result->records_csv.c_str() : "";
}

const char* bws_bench_result_slopes_csv(const bws_bench_result* result) {
    return result ? result->slopes_csv.c_str() : "";
}

const char* bws_bench_result_slopes_markdown(const bws_bench_result* result) {
    return result ? result->slopes_md.c_str() : "";
}

size_t bws_bench_result_report_count(const bws_bench_result* result) {
    return result ? result->reports.size() : 0;
}

bws_status bws_bench_result_report(const bws_bench_result* result, size_t index,
                                   const char** algorithm, double* slope, double* residual) {
    return wrap([&] {
        require(result != nullptr, "null result");
        if (index >= result->reports.size())
            throw std::out_of_range("report index " + std::to_string(index) +
                                    " out of range (have " +
                                    std::to_string(result->reports.size()) + ")");
        if (algorithm != nullptr) *algorithm = result->report_names[index].c_str();
        if (slope != nullptr) *slope = result->reports[index].slope;
        if (residual != nullptr) *residual = result->reports[index].residual;
    });
}

}  // extern "C"
