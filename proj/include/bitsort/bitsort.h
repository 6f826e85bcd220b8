#ifndef BITSORT_BITSORT_H
#define BITSORT_BITSORT_H

/* C API of the bitsort library.
 *
 * Integer values cross this boundary as two's-complement bit patterns in
 * the low `width` bits of a uint64_t; higher bits are ignored. Functions
 * return BWS_OK or an error status; bws_last_error() describes the last
 * failure on the calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(BITSORT_BUILD)
#define BITSORT_API __declspec(dllexport)
#else
#define BITSORT_API __declspec(dllimport)
#endif
#else
#define BITSORT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bws_status {
    BWS_OK = 0,
    BWS_ERROR_CONFIG = 1,    /* invalid configuration or API usage */
    BWS_ERROR_DATA = 2,      /* invalid input data */
    BWS_ERROR_INTEGRITY = 3, /* a benchmarked sort produced unsorted output */
    BWS_ERROR_RANGE = 4,     /* bit position, shift, or key span out of range */
    BWS_ERROR_INTERNAL = 5
} bws_status;

typedef enum bws_algorithm {
    BWS_ALG_BITWISE = 0,
    BWS_ALG_BITWISE_SKIP_EMPTY = 1,
    BWS_ALG_INSERTION = 2,
    BWS_ALG_MERGE = 3,
    BWS_ALG_COUNTING = 4,
    BWS_ALG_PLATFORM = 5
} bws_algorithm;

BITSORT_API const char* bws_version(void);

/* Message for the most recent failing call on this thread; empty string
 * after a successful call. The pointer stays valid until the next call
 * on the same thread. */
BITSORT_API const char* bws_last_error(void);

/* ---- bit utilities ---- */

/* Value (0 or 1) of the given bit, bit 0 least significant. */
BITSORT_API bws_status bws_bit_value(uint64_t value_bits, uint32_t width, uint32_t bit,
                                     int32_t* out);

/* 2^n at the given width; n >= width is an error, not a silent wrap. */
BITSORT_API bws_status bws_power2(uint32_t width, uint32_t n, uint64_t* out);

/* value / 2^n truncated toward zero; result as a bit pattern. */
BITSORT_API bws_status bws_div_pow2(uint64_t value_bits, uint32_t width, int is_unsigned,
                                    uint32_t n, uint64_t* out_bits);

/* Full `width`-character binary image, most significant bit first.
 * buf_size must be at least width+1. */
BITSORT_API bws_status bws_bin_repr(uint64_t value_bits, uint32_t width, char* buf,
                                    size_t buf_size);

/* Binary notation of |value| without leading zeros, '-' prefix when
 * negative. buf_size must be at least width+2. */
BITSORT_API bws_status bws_dec_to_bin(uint64_t value_bits, uint32_t width, int is_unsigned,
                                      char* buf, size_t buf_size);

/* Number of 1 digits in the binary notation of |value|. */
BITSORT_API bws_status bws_popcount_abs(uint64_t value_bits, uint32_t width, int is_unsigned,
                                        uint32_t* out);

/* ---- sorting ---- */

BITSORT_API const char* bws_algorithm_name(bws_algorithm algorithm);
BITSORT_API bws_status bws_algorithm_from_name(const char* name, bws_algorithm* out);

/* In-place non-decreasing sort of `count` elements. `data` must point to
 * a properly aligned array of the native integer type matching `width`
 * and `is_unsigned`. */
BITSORT_API bws_status bws_sort(void* data, size_t count, uint32_t width, int is_unsigned,
                                bws_algorithm algorithm);

/* ---- pass-by-pass trace ---- */

/* Renders the sort of a small array (at most 64 elements) as text.
 * On success *out_text is a NUL-terminated string owned by the caller;
 * release it with bws_text_free. */
BITSORT_API bws_status bws_trace_text(const void* data, size_t count, uint32_t width,
                                      int is_unsigned, char** out_text);
BITSORT_API void bws_text_free(char* text);

/* ---- benchmark harness ---- */

typedef struct bws_bench_config bws_bench_config;
typedef struct bws_bench_result bws_bench_result;

/* Defaults: sizes 2^14..2^20 doubling, 5 trials, seed 42, width 32,
 * signed, uniform_full_range, algorithms "bitwise,merge,platform". */
BITSORT_API bws_bench_config* bws_bench_config_new(void);
BITSORT_API void bws_bench_config_free(bws_bench_config* config);

BITSORT_API bws_status bws_bench_config_set_sizes(bws_bench_config* config,
                                                  const uint64_t* sizes, size_t count);
BITSORT_API bws_status bws_bench_config_set_trials(bws_bench_config* config, uint32_t trials);
BITSORT_API bws_status bws_bench_config_set_seed(bws_bench_config* config, uint64_t seed);
BITSORT_API bws_status bws_bench_config_set_widths(bws_bench_config* config,
                                                   const uint32_t* widths, size_t count);
BITSORT_API bws_status bws_bench_config_set_unsigned(bws_bench_config* config, int is_unsigned);

/* Name, optionally with a span suffix: "uniform_small_range:4096". */
BITSORT_API bws_status bws_bench_config_set_distribution(bws_bench_config* config,
                                                         const char* name);

/* Comma-separated algorithm list; an entry may carry a size range, e.g.
 * "bitwise:16384-1048576,insertion:1024-16384". */
BITSORT_API bws_status bws_bench_config_set_algorithms(bws_bench_config* config,
                                                       const char* csv);

/* Runs the benchmark sequentially and fits per-algorithm scaling
 * exponents. Returns BWS_ERROR_INTEGRITY if any timed sort produced
 * unsorted output. */
BITSORT_API bws_status bws_bench_run(const bws_bench_config* config, bws_bench_result** out);
BITSORT_API void bws_bench_result_free(bws_bench_result* result);

/* CSV with header algorithm,width,n,seed,trial,elapsed_ns,ns_per_element. */
BITSORT_API const char* bws_bench_result_records_csv(const bws_bench_result* result);
/* CSV with header algorithm,slope,residual. */
BITSORT_API const char* bws_bench_result_slopes_csv(const bws_bench_result* result);
BITSORT_API const char* bws_bench_result_slopes_markdown(const bws_bench_result* result);

BITSORT_API size_t bws_bench_result_report_count(const bws_bench_result* result);
BITSORT_API bws_status bws_bench_result_report(const bws_bench_result* result, size_t index,
                                               const char** algorithm, double* slope,
                                               double* residual);

#ifdef __cplusplus
}
#endif

#endif /* BITSORT_BITSORT_H */
