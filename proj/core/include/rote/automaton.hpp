#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rote {

enum class BoolOp { And, Or, Diff, Xor };

// Deterministic automaton over tuples of digits, one track per variable,
// read most-significant digit first with all tracks left-padded by digit 0.
// The dead state is implicit: a kDead entry rejects. Symbols pack the digit
// tuple with track 0 most significant, so symbol order is tuple order.
struct MultiTrackDfa {
    static constexpr uint32_t kDead = 0xFFFFFFFFu;

    std::vector<int> track_sizes;  // digits per track; empty = zero tracks
    uint32_t initial = 0;
    std::vector<char> accepting;
    std::vector<uint32_t> delta;   // [state * num_symbols + symbol]

    int num_tracks() const { return static_cast<int>(track_sizes.size()); }
    int num_symbols() const;
    size_t num_states() const { return accepting.size(); }
    uint32_t next(uint32_t s, int sym) const { return delta[s * num_symbols() + sym]; }

    int pack(std::span<const int> digits) const;
    void unpack(int symbol, std::span<int> digits) const;

    bool run_symbols(std::span<const int> symbols) const;

    friend bool operator==(const MultiTrackDfa&, const MultiTrackDfa&) = default;
};

// Canonical minimal automaton for the same language: partition refinement
// plus breadth-first renumbering in symbol order, so two automata recognize
// the same language iff their minimized forms compare equal.
MultiTrackDfa minimize(const MultiTrackDfa& a);

// Product construction; tracks must agree.
MultiTrackDfa product(const MultiTrackDfa& a, const MultiTrackDfa& b, BoolOp op);

// Complement relative to the valid-padding universe: every track must be a
// path of track_valid (a single-track, all-states-reachable automaton).
MultiTrackDfa complement_within(const MultiTrackDfa& a, const MultiTrackDfa& track_valid);

// Existential projection of one track, with leading-zero closure on the
// remaining tracks, determinized and minimized.
MultiTrackDfa project_track(const MultiTrackDfa& a, int track);

// Reindex tracks: old track i becomes new track old_to_new[i]. Several old
// tracks may map to one new track (diagonal identification); every new track
// must be hit.
MultiTrackDfa retrack(const MultiTrackDfa& a, std::span<const int> old_to_new, int new_track_count);

// Widen with fresh tracks constrained to be valid paths of track_valid; old
// track i is placed at positions[i].
MultiTrackDfa embed(const MultiTrackDfa& a, std::span<const int> positions, int new_track_count,
                    const MultiTrackDfa& track_valid);

bool is_empty(const MultiTrackDfa& a);
bool accepts_all_valid(const MultiTrackDfa& a, const MultiTrackDfa& track_valid);

// Convenience: one digit string per track ('0'..'9' characters), shorter
// tracks are left-padded with zeros.
bool accepts_tracks(const MultiTrackDfa& a, const std::vector<std::string>& tracks);

std::string dfa_to_text(const MultiTrackDfa& a);
MultiTrackDfa dfa_from_text(std::string_view text);

// Single-track automaton with one output per state.
struct Dfao {
    MultiTrackDfa shell;       // acceptance = "state is alive"
    std::vector<int> outputs;

    // Output after consuming the digit string; nullopt on a dead transition.
    std::optional<int> run(std::string_view digits) const;

    friend bool operator==(const Dfao&, const Dfao&) = default;
};

Dfao minimize(const Dfao& d);
std::string dfao_to_text(const Dfao& d);
Dfao dfao_from_text(std::string_view text);

uint64_t fnv1a64(std::string_view s);

}  // namespace rote
