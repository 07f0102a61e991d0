#include <doctest.h>

#include <stdexcept>

#include <random>

#include "rote/bigint.hpp"

using rote::BigInt;
using rote::Rational;

TEST_CASE("bigint small arithmetic matches int64") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-1'000'000'000LL, 1'000'000'000LL);
    for (int i = 0; i < 2000; ++i) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
        CHECK((BigInt(a) <=> BigInt(b)) == (a <=> b));
    }
}

TEST_CASE("bigint division invariant on wide operands") {
    std::mt19937_64 rng(11);
    auto random_big = [&](int limbs) {
        BigInt x(0);
        for (int i = 0; i < limbs; ++i)
            x = x * BigInt(1LL << 32) + BigInt(static_cast<long long>(rng() & 0xFFFFFFFFull));
        return rng() & 1 ? x : -x;
    };
    for (int i = 0; i < 300; ++i) {
        BigInt a = random_big(1 + static_cast<int>(rng() % 6));
        BigInt b = random_big(1 + static_cast<int>(rng() % 4));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("bigint decimal io") {
    BigInt two_pow_64 = BigInt(1);
    for (int i = 0; i < 64; ++i) two_pow_64 = two_pow_64 * BigInt(2);
    CHECK(two_pow_64.to_string() == "18446744073709551616");
    CHECK(BigInt::from_string("18446744073709551616") == two_pow_64);
    CHECK(BigInt::from_string("-42").to_int64() == -42);
    CHECK(BigInt(0).to_string() == "0");
    CHECK_THROWS(BigInt::from_string("12x"));
}

TEST_CASE("bigint gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
}

TEST_CASE("rational reduction and exact comparison") {
    Rational a(7, 3), b(5, 2);
    CHECK(a < b);
    CHECK(a.to_string() == "7/3");
    CHECK(Rational(14, 6) == a);
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(-4, -2) == Rational(2));
    CHECK(Rational(1, -2) < Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);

    // cross multiplication, no rounding: 333/106 < pi < 355/113 ordering test
    CHECK(Rational(333, 106) < Rational(355, 113));
    CHECK((a + b).to_string() == "29/6");
    CHECK((b - a) == Rational(1, 6));
    CHECK((a * b) == Rational(35, 6));
    CHECK((b / a) == Rational(15, 14));
}
