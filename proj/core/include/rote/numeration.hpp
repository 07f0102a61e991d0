#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rote/automaton.hpp"
#include "rote/bigint.hpp"
#include "rote/word.hpp"

namespace rote {

// Shared linear recurrence u_{n+r} = sum_j coeffs[j-1] * u_{n+r-j} together
// with its characteristic polynomial and a rational enclosure of the
// dominant root.
struct Recurrence {
    std::vector<long long> coeffs;
    std::vector<long long> char_poly;  // index = power of X, monic
    Rational root_low, root_high;

    size_t order() const { return coeffs.size(); }
};

struct IncidenceMatrix {
    std::vector<char> letters;
    std::vector<std::vector<long long>> counts;  // [x][y] = occurrences of letter y in image(x)
};

IncidenceMatrix incidence_matrix(const Morphism& m);

// Characteristic polynomial of the incidence matrix, read off as a linear
// recurrence for all image-length sequences.
Recurrence char_recurrence(const IncidenceMatrix& m);

enum class CmpKind { Eq, Ne, Lt, Le, Gt, Ge };

struct SynthesisOptions {
    // how far ahead the carry-usefulness test looks for a reachable zero
    int horizon = 64;
    size_t state_cap = 1u << 22;
};

struct SynthesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Abstract numeration system given by an addressing automaton whose states
// are letters (plus any inflation state), per-transition integer sequences
// under one shared recurrence, and radix order on the accepted language.
struct NumerationSystem {
    std::string name;
    int digit_count = 0;
    int initial = 0;
    std::vector<std::string> state_names;
    std::vector<std::vector<int>> next_state;                 // [state][digit], -1 = none
    std::vector<std::vector<std::vector<long long>>> seq0;    // first order() values per transition
    std::vector<int> outputs;                                 // word symbol per state
    Recurrence rec;
    Morphism base;  // the morphism whose fixed point positions are addressed
    char seed = 0;
    std::optional<Morphism> image;      // inflated systems: letter -> image word
    std::optional<Morphism> marks;      // letter -> letter followed by inserted marks
    std::optional<Morphism> mark_out;   // symbol -> output letter

    size_t num_states() const { return next_state.size(); }

    // k-th value of the sequence attached to one transition
    long long seq_value(int state, int digit, size_t k) const;

    // value of a canonical representation (no leading zero; "" = 0)
    long long evaluate(std::string_view digits) const;

    // canonical representation: the n-th word of the language in radix order
    std::string represent(unsigned long long n) const;

    // number of canonical representations of the given length
    unsigned long long count_of_length(size_t len) const;

    MultiTrackDfa addressing_dfa() const;       // 1 track, every state accepting
    Dfao word_dfao() const;                     // outputs applied to the addressing automaton
    MultiTrackDfa constant_dfa(unsigned long long c) const;
    MultiTrackDfa compare_dfa(CmpKind op) const;  // 2 tracks, value order

    // {(x_1..x_k) : sum coeffs[i] * x_i = 0}, most-significant-first carry
    // construction bounded by the options; never silently wrong, may throw
    // SynthesisError.
    MultiTrackDfa linear_eq_dfa(std::span<const long long> coeffs,
                                const SynthesisOptions& opts = {}) const;
    MultiTrackDfa addition_dfa(const SynthesisOptions& opts = {}) const;  // x + y = z
};

NumerationSystem dt_from_morphism(const Morphism& m, char seed, std::string name);

// Inflated system for the image of the base fixed point: big-step digits are
// relabeled upward to keep radix order, a fresh state absorbs the inserted
// marks via increment digits carrying ultimately-null sequences, and the
// recurrence picks up one extra order.
NumerationSystem inflate_for_image(const NumerationSystem& base_sys, const Morphism& image,
                                   const Morphism& marks, const Morphism& mark_out,
                                   std::string name);

const NumerationSystem& dt_h();
const NumerationSystem& dt_q();

// file format: "base x -> image" rules, "seed x", then optional
// "image/marks/out" rule blocks triggering inflation
NumerationSystem system_from_text(std::string_view text, std::string name);
std::string system_to_text(const NumerationSystem& sys);

// addressing automaton in the automata text format plus one "seq state digit
// v0 v1 ..." line per transition and a trailing "recurrence c1 c2 ..." line
std::string sequence_automaton_to_text(const NumerationSystem& sys);

// the first count words of the addressing language in radix order, starting
// with the empty word; independent of the counting path represent() takes
std::vector<std::string> radix_language(const NumerationSystem& sys, size_t count);

}  // namespace rote
