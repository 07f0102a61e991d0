#include <doctest.h>

#include <stdexcept>

#include <random>

#include "rote/word.hpp"

using namespace rote;

namespace {

Word random_binary(std::mt19937_64& rng, size_t max_len) {
    size_t len = 1 + rng() % max_len;
    Word w;
    for (size_t i = 0; i < len; ++i) w += static_cast<char>('0' + (rng() & 1));
    return w;
}

}  // namespace

TEST_CASE("morphism application") {
    Morphism g = Morphism::parse("0 -> 011\n1 -> 0\n2 -> 01");
    CHECK(g.apply("012") == "011001");
    CHECK(g.apply("") == "");
    Morphism h = Morphism::parse("0 -> 01\n1 -> 21\n2 -> 0");
    CHECK(h.apply("012") == "01210");
    CHECK_THROWS_AS(g.apply("3"), std::domain_error);
}

TEST_CASE("morphism text format") {
    Morphism m = Morphism::parse("# comment\n0 -> 011\n1 -> 0 # trailing\n");
    CHECK(m.image('1') == "0");
    CHECK(Morphism::parse(m.to_text()).rules == m.rules);
    CHECK_THROWS(Morphism::parse("01 -> 1"));
    CHECK_THROWS(Morphism::parse("0 -> 1\n0 -> 11"));
}

TEST_CASE("fixed point prefixes") {
    Morphism h = Morphism::parse("0 -> 01\n1 -> 21\n2 -> 0");
    CHECK(h.fixed_point_prefix('0', 21) == "012102101021012101021");
    CHECK(h.fixed_point_prefix('0', 1) == "0");
    CHECK_THROWS_AS(h.fixed_point_prefix('1', 5), std::invalid_argument);

    CHECK(word_p(12) == "012102101021");
    CHECK(word_p_abc(21) == "abcbacbabacbabcbabacb");
    // printed prefixes of the fixed point and its marked companion
    const Word p70 =
        "abcbacbabacbabcbabacbabcbacbabcbabacbabcbacbabacbabcbacbabcbabacbabcb";
    CHECK(word_p_abc(p70.size()) == p70);
    const Word marked =
        "a12bc3ba12c3ba12ba12c3ba12bc3ba12ba12c3ba12bc3ba12c3ba12bc3ba12ba12";
    CHECK(word_p_marked(marked.size()) == marked);
}

TEST_CASE("the word q and its two constructions") {
    CHECK(word_q(12) == "011001001101");
    CHECK(word_q(0) == "");
    CHECK(word_q(21).substr(11, 10) == "1001100110");
    for (size_t len : {1u, 2u, 17u, 100u, 999u, 5000u})
        CHECK(word_q(len) == word_q_from_marks(len));
}

TEST_CASE("exponent statistics") {
    ExponentStats e = exponent_stats("entente");
    CHECK(e.period == 3);
    CHECK(e.exponent == Rational(7, 3));
    CHECK(exponent_stats("aaaa").period == 1);
    CHECK(exponent_stats("aaaa").exponent == Rational(4));
    CHECK(exponent_stats("1001100110").period == 4);
    CHECK(exponent_stats("1001100110").exponent == Rational(5, 2));
    CHECK_THROWS_AS(exponent_stats(""), std::domain_error);
}

TEST_CASE("critical exponent") {
    CHECK(critical_exponent("01") == Rational(1));
    CHECK(critical_exponent("entente") == Rational(7, 3));

    // period p holds iff dropping the last p letters matches dropping the first p
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Word w = random_binary(rng, 24);
        size_t p = 1 + rng() % w.size();
        bool holds = true;
        for (size_t j = 0; j + p < w.size(); ++j)
            if (w[j] != w[j + p]) holds = false;
        CHECK(holds == (w.substr(0, w.size() - p) == w.substr(p)));
    }

    // monotone under taking factors
    for (int i = 0; i < 100; ++i) {
        Word w = random_binary(rng, 20);
        size_t from = rng() % w.size();
        size_t len = 1 + rng() % (w.size() - from);
        CHECK(critical_exponent(w.substr(from, len)) <= critical_exponent(w));
    }
}

TEST_CASE("exponent threshold scan agrees with critical exponent") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        Word w = random_binary(rng, 30);
        Rational ce = critical_exponent(w);
        CHECK(has_factor_with_exponent(w, ce, false));
        CHECK(!has_factor_with_exponent(w, ce, true));
    }
}

TEST_CASE("rote predicate") {
    CHECK(is_rote("00110011010011001001101001100100110010"));
    CHECK(is_rote("0"));
    CHECK_THROWS_AS(is_rote("abc"), std::domain_error);

    std::mt19937_64 rng(9);
    for (int i = 0; i < 150; ++i) {
        Word w = random_binary(rng, 24);
        bool r = is_rote(w);
        CHECK(r == is_rote(reversed(w)));
        CHECK(r == is_rote(complemented01(w)));
        CHECK(critical_exponent(w) == critical_exponent(reversed(w)));
        CHECK(critical_exponent(w) == critical_exponent(complemented01(w)));
    }
}

TEST_CASE("factor complexity of q") {
    Word q = word_q(5000);
    CHECK(factor_complexity(q, 1) == 2);
    CHECK(factor_complexity(q, 10) == 20);
    CHECK(factor_complexity(q, 16) == 32);
    CHECK_THROWS_AS(factor_complexity(q, 5001), std::out_of_range);
}

TEST_CASE("abelian complexity") {
    Word q = word_q(5000);
    CHECK(abelian_complexity(q, 0) == 1);
    CHECK(abelian_complexity(q, 1) == 2);
    size_t max_seen = 0;
    bool five = false;
    for (size_t n = 1; n <= 2000; ++n) {
        size_t v = abelian_complexity(q, n);
        max_seen = std::max(max_seen, v);
        if (v == 5) five = true;
        CHECK(v <= factor_complexity(q, n));
    }
    CHECK(max_seen == 4);
    CHECK(!five);
}

TEST_CASE("reversible factors") {
    Word q = word_q(5000);
    CHECK(reversible_factors(q, 16).empty());
    CHECK(!reversible_factors(q, 15).empty());
    CHECK(reversible_factors(q, 1) == std::set<Word>{"0", "1"});
}

TEST_CASE("recurrence gaps") {
    RecurrenceGaps g = max_recurrence_gap("0101", 2);
    CHECK(g.max_gap == 2);
    CHECK(g.single_occurrence_count == 1);  // "10" occurs once
    CHECK(!g.conclusive());

    Word q = word_q(5000);
    RecurrenceGaps g1 = max_recurrence_gap(q, 1);
    CHECK(g1.conclusive());
    CHECK(g1.max_gap <= 7);
    RecurrenceGaps g10 = max_recurrence_gap(q, 10);
    CHECK(g10.conclusive());
    CHECK(g10.max_gap <= 70);
}

TEST_CASE("exponent five-halves occurrences") {
    HalfIntegerPowers powers = exponent_five_halves_powers(word_q(2000));
    CHECK(powers.factors == std::set<Word>{"1001100110"});
    bool at11 = false;
    for (auto [i, n] : powers.occurrences) {
        CHECK(n == 10);
        if (i == 11) at11 = true;
    }
    CHECK(at11);
}
