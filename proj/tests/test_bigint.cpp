#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qh/bigint.hpp"

using qh::Int;

namespace {

__int128 to_i128(const Int& v) {
    bool neg = v.is_negative();
    Int a = v.abs();
    __int128 r = 0;
    std::string s = a.str();
    for (char c : s) r = r * 10 + (c - '0');
    return neg ? -r : r;
}

std::string i128_str(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string s;
    while (v != 0) {
        int d = static_cast<int>(neg ? -(v % 10) : (v % 10));
        s.insert(s.begin(), static_cast<char>('0' + d));
        v /= 10;
    }
    if (neg) s.insert(s.begin(), '-');
    return s;
}

}  // namespace

TEST_CASE("small values and decimal io") {
    CHECK(Int(0).str() == "0");
    CHECK(Int(1).str() == "1");
    CHECK(Int(-1).str() == "-1");
    CHECK(Int(123456789).str() == "123456789");
    CHECK(Int::from_string("-987654321098765432109876543210").str() ==
          "-987654321098765432109876543210");
    CHECK(Int(0).is_zero());
    CHECK(Int(4).is_even());
    CHECK(Int(7).is_odd());
    CHECK_THROWS_AS(Int::from_string("12x"), std::invalid_argument);
    CHECK_THROWS_AS(Int::from_string(""), std::invalid_argument);
}

TEST_CASE("int64 round trip incl. limits") {
    for (std::int64_t v : {std::int64_t(0), std::int64_t(-1), std::int64_t(1),
                           std::numeric_limits<std::int64_t>::max(),
                           std::numeric_limits<std::int64_t>::min()}) {
        Int x(v);
        CHECK(x.fits_int64());
        CHECK(x.to_int64() == v);
    }
    Int big = Int(std::numeric_limits<std::int64_t>::max()) + Int(1);
    CHECK(!big.fits_int64());
    Int small = Int(std::numeric_limits<std::int64_t>::min()) - Int(1);
    CHECK(!small.fits_int64());
}

TEST_CASE("arithmetic agrees with __int128 on random operands") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 5000; ++iter) {
        auto a64 = static_cast<std::int64_t>(rng());
        auto b64 = static_cast<std::int64_t>(rng());
        Int a(a64), b(b64);
        CHECK(to_i128(a + b) == static_cast<__int128>(a64) + b64);
        CHECK(to_i128(a - b) == static_cast<__int128>(a64) - b64);
        CHECK(to_i128(a * b) == static_cast<__int128>(a64) * b64);
        CHECK((a < b) == (a64 < b64));
        CHECK((a == b) == (a64 == b64));
    }
}

TEST_CASE("multi-limb algebraic identities") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        Int a(static_cast<std::int64_t>(rng()));
        Int b(static_cast<std::int64_t>(rng()));
        Int c(static_cast<std::int64_t>(rng()));
        Int big = a * b * c;            // up to ~192 bits
        CHECK((big + b) - b == big);
        CHECK(big * Int(0) == Int(0));
        CHECK(big * Int(1) == big);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(-(-big) == big);
        CHECK(big - big == Int(0));
    }
}

TEST_CASE("shifts") {
    Int one(1);
    CHECK((one << 100).str() == "1267650600228229401496703205376");  // 2^100
    CHECK(((one << 100) >> 100) == one);
    Int v = Int::from_string("123456789123456789");
    CHECK(((v << 37) >> 37) == v);
    CHECK((v << 0) == v);
    CHECK((Int(0) << 50).is_zero());
    CHECK((Int(-6) >> 1) == Int(-3));
    CHECK((Int(96) >> 5) == Int(3));
}

TEST_CASE("bit length and trailing zeros") {
    CHECK(Int(0).bit_length() == 0);
    CHECK(Int(1).bit_length() == 1);
    CHECK(Int(255).bit_length() == 8);
    CHECK(Int(256).bit_length() == 9);
    CHECK((Int(1) << 100).trailing_zero_bits() == 100);
    CHECK(Int(12).trailing_zero_bits() == 2);
    CHECK(Int(-8).trailing_zero_bits() == 3);
}

TEST_CASE("divmod by small divisor") {
    Int v = Int::from_string("100000000000000000000000000001");
    Int q = v;
    std::uint32_t r = q.divmod_small_inplace(7);
    CHECK(to_i128(q * Int(7) + Int(static_cast<std::int64_t>(r))) == to_i128(v));
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 500; ++iter) {
        auto x = static_cast<std::int64_t>(rng() >> 1);
        std::uint32_t d = static_cast<std::uint32_t>(rng() % 1000) + 1;
        Int q2(x);
        std::uint32_t rem = q2.divmod_small_inplace(d);
        CHECK(q2.to_int64() == x / d);
        CHECK(rem == static_cast<std::uint32_t>(x % d));
    }
}

TEST_CASE("to_double on large values") {
    Int v = Int(1) << 80;
    CHECK(v.to_double() == doctest::Approx(std::ldexp(1.0, 80)).epsilon(1e-15));
    Int w = Int::from_string("-123456789012345678901234567890");
    __int128 w128 = to_i128(w);
    CHECK(i128_str(w128) == "-123456789012345678901234567890");
    CHECK(w.to_double() == doctest::Approx(-1.2345678901234568e29).epsilon(1e-12));
}
