// bitsort command line: sort integer files, inspect binary
// representations, run the benchmark harness, trace the sort pass by
// pass. Talks to the library exclusively through the C API.

#include <bitsort/bitsort.h>

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// exit statuses: 0 ok, 1 usage/config, 2 data, 3 integrity
int exit_for(bws_status status) {
    switch (status) {
        case BWS_OK: return 0;
        case BWS_ERROR_CONFIG: return 1;
        case BWS_ERROR_DATA: return 2;
        case BWS_ERROR_RANGE: return 2;
        case BWS_ERROR_INTEGRITY: return 3;
        case BWS_ERROR_INTERNAL: return 1;
    }
    return 1;
}

int fail(bws_status status) {
    std::cerr << "bitsort: " << bws_last_error() << "\n";
    return exit_for(status);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool in_signed_range(int64_t v, uint32_t width) {
    if (width >= 64) return true;
    const int64_t hi = (int64_t{1} << (width - 1)) - 1;
    return v >= -hi - 1 && v <= hi;
}

bool in_unsigned_range(uint64_t v, uint32_t width) {
    if (width >= 64) return true;
    return v < (uint64_t{1} << width);
}

// Parses one decimal integer and range-checks it against the width,
// returning the value as a two's-complement bit pattern.
bool parse_value(std::string_view text, uint32_t width, bool is_unsigned, uint64_t& pattern,
                 std::string& error) {
    if (text.empty()) {
        error = "empty value";
        return false;
    }
    if (is_unsigned) {
        uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            error = "cannot parse '" + std::string(text) + "' as an unsigned integer";
            return false;
        }
        if (!in_unsigned_range(v, width)) {
            error = "value " + std::string(text) + " out of range for unsigned " +
                    std::to_string(width) + "-bit";
            return false;
        }
        pattern = v;
    } else {
        int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            error = "cannot parse '" + std::string(text) + "' as an integer";
            return false;
        }
        if (!in_signed_range(v, width)) {
            error = "value " + std::string(text) + " out of range for signed " +
                    std::to_string(width) + "-bit";
            return false;
        }
        pattern = static_cast<uint64_t>(v);
    }
    if (width < 64) pattern &= (uint64_t{1} << width) - 1;
    return true;
}

// Integer file: one decimal value per line; blank lines and lines
// starting with '#' are ignored. Any bad line is reported by number.
bool read_integer_file(const std::string& path, uint32_t width, bool is_unsigned,
                       std::vector<uint64_t>& patterns) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) {
            std::cerr << "bitsort: cannot open '" << path << "'\n";
            return false;
        }
        in = &file;
    }
    std::string line;
    size_t line_number = 0;
    while (std::getline(*in, line)) {
        ++line_number;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        uint64_t pattern = 0;
        std::string error;
        if (!parse_value(text, width, is_unsigned, pattern, error)) {
            std::cerr << "bitsort: " << (path == "-" ? "<stdin>" : path) << ":" << line_number
                      << ": " << error << "\n";
            return false;
        }
        patterns.push_back(pattern);
    }
    return true;
}

template <class T>
int sort_typed(std::vector<uint64_t>& patterns, uint32_t width, bool is_unsigned,
               bws_algorithm algorithm, std::ostream& out) {
    std::vector<T> data(patterns.size());
    for (size_t i = 0; i < patterns.size(); ++i) data[i] = static_cast<T>(patterns[i]);
    const bws_status status =
        bws_sort(data.data(), data.size(), width, is_unsigned ? 1 : 0, algorithm);
    if (status != BWS_OK) return fail(status);
    std::ostringstream lines;
    for (const T v : data) {
        if constexpr (std::is_signed_v<T>)
            lines << static_cast<long long>(v) << '\n';
        else
            lines << static_cast<unsigned long long>(v) << '\n';
    }
    out << lines.str();
    return 0;
}

int sort_dispatch(std::vector<uint64_t>& patterns, uint32_t width, bool is_unsigned,
                  bws_algorithm algorithm, std::ostream& out) {
    switch (width) {
        case 8:
            return is_unsigned ? sort_typed<uint8_t>(patterns, width, true, algorithm, out)
                               : sort_typed<int8_t>(patterns, width, false, algorithm, out);
        case 16:
            return is_unsigned ? sort_typed<uint16_t>(patterns, width, true, algorithm, out)
                               : sort_typed<int16_t>(patterns, width, false, algorithm, out);
        case 32:
            return is_unsigned ? sort_typed<uint32_t>(patterns, width, true, algorithm, out)
                               : sort_typed<int32_t>(patterns, width, false, algorithm, out);
        case 64:
            return is_unsigned ? sort_typed<uint64_t>(patterns, width, true, algorithm, out)
                               : sort_typed<int64_t>(patterns, width, false, algorithm, out);
    }
    std::cerr << "bitsort: unsupported width " << width << "\n";
    return 1;
}

template <class T>
int trace_typed(const std::vector<uint64_t>& patterns, uint32_t width, bool is_unsigned) {
    std::vector<T> data(patterns.size());
    for (size_t i = 0; i < patterns.size(); ++i) data[i] = static_cast<T>(patterns[i]);
    char* text = nullptr;
    const bws_status status =
        bws_trace_text(data.data(), data.size(), width, is_unsigned ? 1 : 0, &text);
    if (status != BWS_OK) return fail(status);
    std::cout << text;
    bws_text_free(text);
    return 0;
}

int trace_dispatch(const std::vector<uint64_t>& patterns, uint32_t width, bool is_unsigned) {
    switch (width) {
        case 8:
            return is_unsigned ? trace_typed<uint8_t>(patterns, width, true)
                               : trace_typed<int8_t>(patterns, width, false);
        case 16:
            return is_unsigned ? trace_typed<uint16_t>(patterns, width, true)
                               : trace_typed<int16_t>(patterns, width, false);
        case 32:
            return is_unsigned ? trace_typed<uint32_t>(patterns, width, true)
                               : trace_typed<int32_t>(patterns, width, false);
        case 64:
            return is_unsigned ? trace_typed<uint64_t>(patterns, width, true)
                               : trace_typed<int64_t>(patterns, width, false);
    }
    std::cerr << "bitsort: unsupported width " << width << "\n";
    return 1;
}

struct sort_args {
    std::string input;
    uint32_t width = 32;
    bool is_unsigned = false;
    std::string algorithm = "bitwise";
    std::string out_path;
};

int run_sort(const sort_args& args) {
    bws_algorithm algorithm = BWS_ALG_BITWISE;
    if (const bws_status s = bws_algorithm_from_name(args.algorithm.c_str(), &algorithm);
        s != BWS_OK)
        return fail(s);
    std::vector<uint64_t> patterns;
    if (!read_integer_file(args.input, args.width, args.is_unsigned, patterns)) return 2;

    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path);
        if (!out) {
            std::cerr << "bitsort: cannot write '" << args.out_path << "'\n";
            return 2;
        }
        return sort_dispatch(patterns, args.width, args.is_unsigned, algorithm, out);
    }
    return sort_dispatch(patterns, args.width, args.is_unsigned, algorithm, std::cout);
}

struct bits_args {
    std::string value;
    uint32_t width = 32;
    bool is_unsigned = false;
};

int run_bits(const bits_args& args) {
    uint64_t pattern = 0;
    std::string error;
    if (!parse_value(trim(args.value), args.width, args.is_unsigned, pattern, error)) {
        std::cerr << "bitsort: " << error << "\n";
        return 2;
    }
    const int is_unsigned = args.is_unsigned ? 1 : 0;
    char buf[72];
    if (const bws_status s = bws_bin_repr(pattern, args.width, buf, sizeof buf); s != BWS_OK)
        return fail(s);
    std::cout << "bin_repr: " << buf << "\n";
    if (const bws_status s = bws_dec_to_bin(pattern, args.width, is_unsigned, buf, sizeof buf);
        s != BWS_OK)
        return fail(s);
    std::cout << "dec_to_bin: " << buf << "\n";
    uint32_t ones = 0;
    if (const bws_status s = bws_popcount_abs(pattern, args.width, is_unsigned, &ones);
        s != BWS_OK)
        return fail(s);
    std::cout << "popcount_abs: " << ones << "\n";
    return 0;
}

struct bench_args {
    std::string algorithms = "bitwise,merge,platform";
    std::string sizes = "16384,32768,65536,131072,262144,524288,1048576";
    uint32_t trials = 5;
    uint64_t seed = 42;
    uint32_t width = 32;
    bool is_unsigned = false;
    std::string distribution = "uniform_full_range";
    std::string out_path;
};

bool write_file(const std::string& path, const char* contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "bitsort: cannot write '" << path << "'\n";
        return false;
    }
    out << contents;
    return true;
}

int run_bench(const bench_args& args) {
    bws_bench_config* config = bws_bench_config_new();
    if (config == nullptr) {
        std::cerr << "bitsort: out of memory\n";
        return 1;
    }
    struct config_guard {
        bws_bench_config* c;
        ~config_guard() { bws_bench_config_free(c); }
    } guard{config};

    std::vector<uint64_t> sizes;
    for (std::stringstream ss(args.sizes); ss.good();) {
        std::string token;
        if (!std::getline(ss, token, ',')) break;
        uint64_t n = 0;
        const auto text = trim(token);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            std::cerr << "bitsort: invalid size '" << token << "'\n";
            return 1;
        }
        sizes.push_back(n);
    }

    bws_status s = bws_bench_config_set_sizes(config, sizes.data(), sizes.size());
    if (s == BWS_OK) s = bws_bench_config_set_trials(config, args.trials);
    if (s == BWS_OK) s = bws_bench_config_set_seed(config, args.seed);
    if (s == BWS_OK) s = bws_bench_config_set_widths(config, &args.width, 1);
    if (s == BWS_OK) s = bws_bench_config_set_unsigned(config, args.is_unsigned ? 1 : 0);
    if (s == BWS_OK) s = bws_bench_config_set_distribution(config, args.distribution.c_str());
    if (s == BWS_OK) s = bws_bench_config_set_algorithms(config, args.algorithms.c_str());
    if (s != BWS_OK) return fail(s);

    bws_bench_result* result = nullptr;
    s = bws_bench_run(config, &result);
    if (s != BWS_OK) return fail(s);
    struct result_guard {
        bws_bench_result* r;
        ~result_guard() { bws_bench_result_free(r); }
    } rguard{result};

    if (!args.out_path.empty()) {
        const std::string records_path = args.out_path + ".records.csv";
        const std::string slopes_path = args.out_path + ".slopes.csv";
        const std::string md_path = args.out_path + ".slopes.md";
        if (!write_file(records_path, bws_bench_result_records_csv(result)) ||
            !write_file(slopes_path, bws_bench_result_slopes_csv(result)) ||
            !write_file(md_path, bws_bench_result_slopes_markdown(result)))
            return 2;
        std::cout << "wrote " << records_path << "\n"
                  << "wrote " << slopes_path << "\n"
                  << "wrote " << md_path << "\n";
        std::cout << bws_bench_result_slopes_markdown(result);
        return 0;
    }
    std::cout << bws_bench_result_records_csv(result) << "\n"
              << bws_bench_result_slopes_markdown(result);
    return 0;
}

struct trace_args {
    std::string input;
    uint32_t width = 32;
    bool is_unsigned = false;
};

int run_trace(const trace_args& args) {
    std::vector<uint64_t> patterns;
    if (!read_integer_file(args.input, args.width, args.is_unsigned, patterns)) return 2;
    return trace_dispatch(patterns, args.width, args.is_unsigned);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bitwise sorting toolkit"};
    app.require_subcommand(1);
    const std::vector<uint32_t> widths{8, 16, 32, 64};

    sort_args sort_opts;
    CLI::App* sort_cmd = app.add_subcommand("sort", "sort an integer file");
    sort_cmd->add_option("input", sort_opts.input, "input file, '-' for stdin")->required();
    sort_cmd->add_option("--width", sort_opts.width, "element width in bits")
        ->check(CLI::IsMember(widths));
    sort_cmd->add_flag("--unsigned", sort_opts.is_unsigned, "treat values as unsigned");
    sort_cmd->add_option("--algorithm", sort_opts.algorithm, "sorting algorithm");
    sort_cmd->add_option("--out", sort_opts.out_path, "write output to a file");

    bits_args bits_opts;
    CLI::App* bits_cmd = app.add_subcommand("bits", "show binary representations of a value");
    bits_cmd->add_option("value", bits_opts.value, "decimal value (use -- before negatives)")
        ->required();
    bits_cmd->add_option("--width", bits_opts.width, "element width in bits")
        ->check(CLI::IsMember(widths));
    bits_cmd->add_flag("--unsigned", bits_opts.is_unsigned, "treat the value as unsigned");

    bench_args bench_opts;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run the timing harness");
    bench_cmd->add_option("--algorithms", bench_opts.algorithms,
                          "csv list, entries may carry a size range (name:min-max)");
    bench_cmd->add_option("--sizes", bench_opts.sizes, "csv ladder of array sizes");
    bench_cmd->add_option("--trials", bench_opts.trials, "trials per (algorithm, n)");
    bench_cmd->add_option("--seed", bench_opts.seed, "input generator seed");
    bench_cmd->add_option("--width", bench_opts.width, "element width in bits")
        ->check(CLI::IsMember(widths));
    bench_cmd->add_flag("--unsigned", bench_opts.is_unsigned, "benchmark unsigned elements");
    bench_cmd->add_option("--distribution", bench_opts.distribution,
                          "input distribution (uniform_full_range, uniform_small_range[:span], "
                          "sorted, reverse_sorted, constant)");
    bench_cmd->add_option("--out", bench_opts.out_path,
                          "base path for .records.csv, .slopes.csv, .slopes.md");

    trace_args trace_opts;
    CLI::App* trace_cmd = app.add_subcommand("trace", "show the sort pass by pass");
    trace_cmd->add_option("input", trace_opts.input, "input file, '-' for stdin")->required();
    trace_cmd->add_option("--width", trace_opts.width, "element width in bits")
        ->check(CLI::IsMember(widths));
    trace_cmd->add_flag("--unsigned", trace_opts.is_unsigned, "treat values as unsigned");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (sort_cmd->parsed()) return run_sort(sort_opts);
    if (bits_cmd->parsed()) return run_bits(bits_opts);
    if (bench_cmd->parsed()) return run_bench(bench_opts);
    if (trace_cmd->parsed()) return run_trace(trace_opts);
    return 1;
}
