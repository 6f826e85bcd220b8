#include "doctest.h"

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>

#include "bitops.hpp"

using namespace bws;

namespace {

// golden vectors for 16-bit elements: value, memory image
struct golden_row {
    std::int16_t value;
    const char* image;
};

constexpr golden_row golden_rows[] = {
    {0, "0000000000000000"},       {1, "0000000000000001"},
    {-1, "1111111111111111"},      {2, "0000000000000010"},
    {-2, "1111111111111110"},      {16, "0000000000010000"},
    {-16, "1111111111110000"},     {26, "0000000000011010"},
    {-26, "1111111111100110"},     {41, "0000000000101001"},
    {-41, "1111111111010111"},     {32767, "0111111111111111"},
    {-32767, "1000000000000001"},  {-32768, "1000000000000000"},
};

}  // namespace

TEST_CASE("bin_repr reproduces the 16-bit golden vectors") {
    for (const golden_row& row : golden_rows) {
        CAPTURE(row.value);
        CHECK(bin_repr(row.value) == row.image);
    }
}

TEST_CASE("bin_repr round-trips through an unsigned parse, exhaustively at width 16") {
    for (std::int32_t v = -32768; v <= 32767; ++v) {
        const auto value = static_cast<std::int16_t>(v);
        const std::string image = bin_repr(value);
        REQUIRE(image.size() == 16);
        const auto parsed =
            static_cast<std::uint16_t>(std::strtoul(image.c_str(), nullptr, 2));
        REQUIRE(parsed == static_cast<std::uint16_t>(value));
    }
}

TEST_CASE("bit_value") {
    for (unsigned i = 0; i < 16; ++i) CHECK(bit_value<std::int16_t>(0, i) == 0);
    CHECK(bit_value<std::int16_t>(26, 3) == 1);
    CHECK(bit_value<std::int16_t>(26, 0) == 0);
    CHECK(bit_value<std::int16_t>(-1, 15) == 1);
    CHECK(bit_value<std::uint64_t>(1ull << 63, 63) == 1);

    CHECK_THROWS_AS(bit_value<std::int16_t>(1, 16), std::out_of_range);
    CHECK_THROWS_AS(bit_value<std::uint8_t>(1, 8), std::out_of_range);
    CHECK_THROWS_AS(bit_value<std::int64_t>(1, 64), std::out_of_range);
}

TEST_CASE("bit_value agrees with bin_repr characters") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        const auto x = static_cast<std::int32_t>(rng());
        const std::string image = bin_repr(x);
        for (unsigned i = 0; i < 32; ++i)
            REQUIRE(bit_value(x, i) == (image[31 - i] == '1' ? 1 : 0));
    }
}

TEST_CASE("power2") {
    CHECK(power2<std::int16_t>(0) == 1);
    CHECK(power2<std::int16_t>(4) == 16);
    CHECK(power2<std::uint16_t>(15) == 32768u);
    CHECK(power2<std::uint64_t>(63) == (1ull << 63));

    SUBCASE("doubling chain") {
        for (unsigned n = 1; n < 16; ++n)
            CHECK(power2<std::int16_t>(n) == 2 * power2<std::int16_t>(n - 1));
        for (unsigned n = 1; n < 64; ++n)
            CHECK(power2<std::uint64_t>(n) == 2 * power2<std::uint64_t>(n - 1));
    }
    SUBCASE("shift by the width is rejected") {
        CHECK_THROWS_AS(power2<std::int16_t>(16), std::out_of_range);
        CHECK_THROWS_AS(power2<std::uint8_t>(8), std::out_of_range);
    }
}

TEST_CASE("div_pow2 equals truncated division by 2^n") {
    CHECK(div_pow2<std::int16_t>(-41, 3) == -5);
    CHECK(div_pow2<std::int16_t>(26, 1) == 13);
    CHECK(div_pow2<std::uint16_t>(41, 3) == 5);

    SUBCASE("shift by zero is the identity") {
        std::mt19937_64 rng(11);
        for (int round = 0; round < 100; ++round) {
            const auto x = static_cast<std::int32_t>(rng());
            CHECK(div_pow2(x, 0) == x);
        }
        CHECK(div_pow2<std::int16_t>(-32768, 0) == -32768);
    }
    SUBCASE("arithmetic oracle on random values") {
        std::mt19937_64 rng(13);
        for (int round = 0; round < 2000; ++round) {
            const auto x = static_cast<std::int32_t>(rng());
            if (x == std::numeric_limits<std::int32_t>::min()) continue;
            const auto n = static_cast<unsigned>(rng() % 32);
            const std::int32_t expected =
                static_cast<std::int32_t>(static_cast<std::int64_t>(x) / (std::int64_t{1} << n));
            CAPTURE(x);
            CAPTURE(n);
            REQUIRE(div_pow2(x, n) == expected);
        }
    }
    SUBCASE("minimum value goes through the unsigned magnitude") {
        CHECK(div_pow2<std::int16_t>(-32768, 3) == -4096);
        CHECK(div_pow2<std::int16_t>(-32768, 15) == -1);
    }
    SUBCASE("oversize shifts are rejected") {
        CHECK_THROWS_AS(div_pow2<std::int16_t>(1, 16), std::out_of_range);
    }
}

TEST_CASE("dec_to_bin") {
    CHECK(dec_to_bin<std::int32_t>(0) == "0");
    CHECK(dec_to_bin<std::int32_t>(41) == "101001");
    CHECK(dec_to_bin<std::int32_t>(-41) == "-101001");
    CHECK(dec_to_bin<std::int16_t>(-32768) == "-1000000000000000");
    CHECK(dec_to_bin<std::uint8_t>(255) == "11111111");
    CHECK(dec_to_bin<std::uint16_t>(0) == "0");

    SUBCASE("matches bin_repr with the leading zeros stripped") {
        std::mt19937_64 rng(17);
        for (int round = 0; round < 500; ++round) {
            const auto x = static_cast<std::int16_t>(rng());
            const auto mag = static_cast<std::int16_t>(x < 0 ? -x : x);
            if (x == -32768) continue;
            std::string stripped = bin_repr(mag);
            stripped.erase(0, stripped.find_first_not_of('0'));
            if (stripped.empty()) stripped = "0";
            REQUIRE(dec_to_bin(x) == (x < 0 ? "-" : "") + stripped);
        }
    }
}

TEST_CASE("popcount_abs") {
    CHECK(popcount_abs<std::int32_t>(0) == 0);
    CHECK(popcount_abs<std::int32_t>(41) == 3);
    CHECK(popcount_abs<std::int32_t>(-26) == 3);
    CHECK(popcount_abs<std::int16_t>(-32768) == 1);
    CHECK(popcount_abs<std::uint16_t>(0xffff) == 16);

    SUBCASE("equals the count of 1 digits in dec_to_bin") {
        std::mt19937_64 rng(19);
        for (int round = 0; round < 500; ++round) {
            const auto x = static_cast<std::int64_t>(rng());
            const std::string digits = dec_to_bin(x);
            int ones = 0;
            for (const char c : digits)
                if (c == '1') ++ones;
            REQUIRE(popcount_abs(x) == ones);
        }
    }
}
