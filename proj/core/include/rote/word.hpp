#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rote/bigint.hpp"

namespace rote {

// Finite words are plain strings of symbol characters; the alphabet is
// whatever occurs, except where an operation requires binary {0,1}.
using Word = std::string;

Word reversed(const Word& w);
Word complemented01(const Word& w);  // 0 <-> 1, throws on other symbols

// Letter-to-word substitution over single-character letters.
struct Morphism {
    std::map<char, Word> rules;

    bool has(char c) const { return rules.count(c) != 0; }
    const Word& image(char c) const;           // throws std::domain_error
    Word apply(const Word& w) const;
    bool prolongable_on(char seed) const;      // image(seed) = seed . x, |image| >= 2
    Word fixed_point_prefix(char seed, size_t len) const;

    // One rule per line: "letter -> image"; '#' starts a comment.
    static Morphism parse(std::string_view text);
    std::string to_text() const;
};

// The fixed point p of 0->01, 1->21, 2->0 and its relatives.
Word word_p(size_t len);             // over {0,1,2}
Word word_p_abc(size_t len);         // same word over {a,b,c}
Word word_p_marked(size_t len);      // inflated companion over {a,b,c,1,2,3}
Word word_q(size_t len);             // q = image of p under 0->011, 1->0, 2->01
Word word_q_from_marks(size_t len);  // q reconstructed through the marked word

// The specific morphisms behind the words above, over {a,b,c}.
const Morphism& morphism_p_base();   // a->ab, b->cb, c->a
const Morphism& morphism_q_image();  // a->011, b->0, c->01
const Morphism& morphism_q_marks();  // a->a12, b->b, c->c3
const Morphism& morphism_q_mark_out();  // letters->0, marks->1

struct ExponentStats {
    size_t period = 0;
    Rational exponent;
};

// Shortest period and |w| / period. Throws std::domain_error on empty input.
ExponentStats exponent_stats(const Word& w);

// Max of exponent_stats over all nonempty factors.
Rational critical_exponent(const Word& w);

// True iff some factor has exponent > threshold (strict) or >= threshold.
bool has_factor_with_exponent(const Word& w, const Rational& threshold, bool strict_greater);

// rho_w(i) <= 2i for all 1 <= i <= |w|; binary alphabet required.
bool is_rote(const Word& w);

size_t factor_complexity(const Word& prefix, size_t n);

// Number of distinct zero-counts among the length-n factors.
size_t abelian_complexity(const Word& prefix, size_t n);

// Length-n factors whose reversal is also a factor of the prefix.
std::set<Word> reversible_factors(const Word& prefix, size_t n);

struct RecurrenceGaps {
    size_t max_gap = 0;                // over factors with >= 2 occurrences
    size_t single_occurrence_count = 0;
    bool conclusive() const { return single_occurrence_count == 0; }
};

// Max distance between consecutive start positions of the same length-n
// factor. Factors seen only once make the bound inconclusive.
RecurrenceGaps max_recurrence_gap(const Word& prefix, size_t n);

// All (position, length) pairs such that prefix[i..i+n-1] has a period p
// with n * 2 == 5 * p, plus the factor set involved.
struct HalfIntegerPowers {
    std::vector<std::pair<size_t, size_t>> occurrences;  // (i, n)
    std::set<Word> factors;
};
HalfIntegerPowers exponent_five_halves_powers(const Word& prefix);

}  // namespace rote
