#include "doctest.h"

#include <random>

#include "sclogic/bignum.hpp"

using scl::BigNat;

TEST_CASE("small values round-trip") {
    CHECK(BigNat(0).to_string() == "0");
    CHECK(BigNat(1).to_string() == "1");
    CHECK(BigNat(999999999).to_string() == "999999999");
    CHECK(BigNat(1000000000).to_string() == "1000000000");
    CHECK(BigNat(18446744073709551615ull).to_string() == "18446744073709551615");
}

TEST_CASE("arithmetic agrees with native 64-bit on small operands") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t a = rng() % 3000000000ull, b = rng() % 3000000000ull;
        CHECK((BigNat(a) + BigNat(b)).to_string() == std::to_string(a + b));
        CHECK((BigNat(a) * BigNat(b)).to_string() == std::to_string(a * b));
    }
}

TEST_CASE("multi-limb multiplication") {
    BigNat x = 18446744073709551615ull;  // 2^64 - 1
    CHECK((x * x).to_string() == "340282366920938463426481119284349108225");
    BigNat p = 1;
    for (int i = 0; i < 128; ++i) p *= 2;
    CHECK(p.to_string() == "340282366920938463463374607431768211456");  // 2^128
}

TEST_CASE("fits_u64 boundary") {
    CHECK(BigNat(18446744073709551615ull).fits_u64());
    CHECK(BigNat(18446744073709551615ull).as_u64() == 18446744073709551615ull);
    BigNat just_over = BigNat(18446744073709551615ull) + BigNat(1);
    CHECK_FALSE(just_over.fits_u64());
    CHECK(BigNat(7).as_u64() == 7);
}
