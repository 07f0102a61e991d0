#pragma once

#include <optional>
#include <set>
#include <vector>

#include "rote/word.hpp"

namespace rote {

// Exhaustive tree of finite binary Rote words under an exponent threshold.
struct SearchConfig {
    Rational threshold{5, 2};
    // strict: prune words containing a factor of exponent >= threshold;
    // otherwise prune only exponent > threshold
    bool strict = true;
    std::optional<size_t> max_length;
    bool first_letter_fixed = false;  // explore only words starting with '0'
};

struct SearchResult {
    size_t max_depth = 0;
    std::vector<Word> maximal_words;       // leaves with no valid extension
    std::vector<size_t> level_counts;      // [n] = number of valid words of length n
    bool truncated = false;
};

SearchResult grow_tree(const SearchConfig& cfg);

// Closure of a set of binary words under reversal and 0<->1 complement.
std::set<Word> symmetry_closure(const std::set<Word>& words);

std::vector<size_t> level_counts(const SearchConfig& cfg, size_t n_max);

}  // namespace rote
