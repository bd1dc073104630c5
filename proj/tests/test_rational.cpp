#include <doctest.h>

#include "cosmotope/prng.hpp"
#include "cosmotope/rational.hpp"

using namespace cosmo;

TEST_CASE("bigint arithmetic agrees with machine integers") {
    SplitMix64 gen(42);
    for (int trial = 0; trial < 2000; ++trial) {
        long long a = (long long)(gen.next() % 2000001) - 1000000;
        long long b = (long long)(gen.next() % 2000001) - 1000000;
        CHECK((BigInt(a) + BigInt(b)).to_long_long() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_long_long() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_long_long() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_long_long() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_long_long() == a % b);
        }
        CHECK(cmp(BigInt(a), BigInt(b)) == (a < b ? -1 : a > b ? 1 : 0));
    }
}

TEST_CASE("bigint handles large products and strings") {
    BigInt x(1);
    for (int i = 1; i <= 30; ++i) x *= BigInt(i);
    CHECK(x.to_string() == "265252859812191058636308480000000");
    BigInt y = x * x;
    CHECK(y / x == x);
    CHECK((y % x).is_zero());
    CHECK((-x).to_string() == "-265252859812191058636308480000000");
}

TEST_CASE("bigint gcd") {
    SplitMix64 gen(7);
    for (int trial = 0; trial < 500; ++trial) {
        long long a = (long long)(gen.next() % 1000000);
        long long b = (long long)(gen.next() % 1000000);
        long long g = std::__gcd(a, b);
        CHECK(gcd(BigInt(a), BigInt(b)).to_long_long() == g);
    }
    BigInt big(1);
    for (int i = 0; i < 5; ++i) big *= BigInt(1000000007LL);
    CHECK(gcd(big * BigInt(6), big * BigInt(4)) == big * BigInt(2));
}

TEST_CASE("rational normalization and arithmetic") {
    Rational half(BigInt(2), BigInt(4));
    CHECK(half.num().to_long_long() == 1);
    CHECK(half.den().to_long_long() == 2);
    CHECK(half.to_string() == "1/2");
    CHECK((half + half) == Rational(1));
    CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)) == half);
    CHECK(Rational(BigInt(3), BigInt(-6)).to_string() == "-1/2");
    CHECK((Rational(5) / Rational(7)).to_fraction_string() == "5/7");
    CHECK(Rational(4).to_fraction_string() == "4/1");
    CHECK(Rational(1) / Rational(3) < half);
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational sum accumulator matches term-by-term addition") {
    SplitMix64 gen(11);
    RationalSum sum;
    Rational direct(0);
    for (int i = 0; i < 60; ++i) {
        Rational r(BigInt((long long)(gen.next() % 2001) - 1000),
                   BigInt((long long)(gen.next() % 999) + 1));
        sum.add(r);
        direct += r;
    }
    CHECK(sum.value() == direct);
}
