#include <doctest.h>

#include <stdexcept>

#include "rote/search.hpp"

using namespace rote;

TEST_CASE("square-free binary words stop at length three") {
    SearchConfig cfg;
    cfg.threshold = Rational(2);
    cfg.strict = true;
    cfg.max_length = 10;
    SearchResult res = grow_tree(cfg);
    CHECK(res.max_depth == 3);
    CHECK(!res.truncated);
    std::set<Word> leaves(res.maximal_words.begin(), res.maximal_words.end());
    CHECK(leaves.count("010") == 1);
    CHECK(leaves.count("101") == 1);
}

TEST_CASE("threshold must exceed one") {
    SearchConfig cfg;
    cfg.threshold = Rational(1);
    CHECK_THROWS_AS(grow_tree(cfg), std::invalid_argument);
}

TEST_CASE("strict five-halves tree") {
    SearchConfig cfg;  // defaults: threshold 5/2, strict
    SearchResult res = grow_tree(cfg);
    CHECK(res.max_depth == 38);
    CHECK(!res.truncated);
    CHECK(res.level_counts[1] == 2);
    size_t at38 = 0;
    for (const auto& w : res.maximal_words)
        if (w.size() == 38) ++at38;
    CHECK(at38 == 8);

    // counts are symmetric between the two first letters
    SearchConfig fixed = cfg;
    fixed.first_letter_fixed = true;
    SearchResult half = grow_tree(fixed);
    CHECK(half.level_counts[1] == 1);
    REQUIRE(half.level_counts.size() == res.level_counts.size());
    for (size_t n = 1; n < res.level_counts.size(); ++n)
        CHECK(res.level_counts[n] == 2 * half.level_counts[n]);
}

TEST_CASE("non-strict tree grows at least linearly") {
    SearchConfig cfg;
    cfg.strict = false;
    std::vector<size_t> counts = level_counts(cfg, 60);
    REQUIRE(counts.size() >= 61);
    for (size_t n = 1; n <= 60; ++n) CHECK(counts[n] >= 2 * n);
}

TEST_CASE("capped search reports truncation") {
    SearchConfig cfg;
    cfg.strict = false;
    cfg.max_length = 12;
    SearchResult res = grow_tree(cfg);
    CHECK(res.truncated);
    CHECK(res.max_depth == 12);
}

TEST_CASE("symmetry closure") {
    CHECK(symmetry_closure({"0"}) == std::set<Word>{"0", "1"});
    CHECK(symmetry_closure({"01"}) == std::set<Word>{"01", "10"});
    const Word w1 = "00110011010011001001101001100100110010";
    const Word w2 = "00110011010011001001101001100100110011";
    CHECK(symmetry_closure({w1, w2}).size() == 8);
}
