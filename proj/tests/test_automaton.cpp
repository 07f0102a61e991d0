#include <doctest.h>

#include <stdexcept>

#include <random>

#include "rote/automaton.hpp"
#include "rote/numeration.hpp"
#include "rote/word.hpp"

using namespace rote;

namespace {

// complete single-track automaton accepting everything; serves as the
// validity universe for generic automata tests
MultiTrackDfa all_valid(int digits) {
    MultiTrackDfa a;
    a.track_sizes = {digits};
    a.initial = 0;
    a.accepting = {1};
    a.delta.assign(digits, 0);
    return a;
}

MultiTrackDfa random_dfa(std::mt19937_64& rng, int tracks, int digits, int states) {
    MultiTrackDfa a;
    a.track_sizes.assign(tracks, digits);
    int symbols = 1;
    for (int t = 0; t < tracks; ++t) symbols *= digits;
    a.initial = 0;
    a.accepting.resize(states);
    a.delta.resize(static_cast<size_t>(states) * symbols);
    for (int s = 0; s < states; ++s) {
        a.accepting[s] = rng() & 1;
        for (int sym = 0; sym < symbols; ++sym)
            a.delta[static_cast<size_t>(s) * symbols + sym] =
                rng() % 4 == 0 ? MultiTrackDfa::kDead : static_cast<uint32_t>(rng() % states);
    }
    return a;
}

std::vector<int> random_word(std::mt19937_64& rng, int symbols, size_t max_len) {
    std::vector<int> w(rng() % (max_len + 1));
    for (auto& sym : w) sym = static_cast<int>(rng() % symbols);
    return w;
}

}  // namespace

TEST_CASE("minimize preserves the language and is idempotent") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 40; ++round) {
        MultiTrackDfa a = random_dfa(rng, 1, 3, 6);
        MultiTrackDfa m = minimize(a);
        MultiTrackDfa mm = minimize(m);
        CHECK(m == mm);
        for (int i = 0; i < 200; ++i) {
            std::vector<int> w = random_word(rng, 3, 9);
            CHECK(a.run_symbols(w) == m.run_symbols(w));
        }
    }
}

TEST_CASE("boolean laws at the language level") {
    std::mt19937_64 rng(23);
    MultiTrackDfa valid = all_valid(2);
    for (int round = 0; round < 25; ++round) {
        MultiTrackDfa a = random_dfa(rng, 1, 2, 5);
        MultiTrackDfa b = random_dfa(rng, 1, 2, 5);

        // double complement
        CHECK(minimize(a) == complement_within(complement_within(a, valid), valid));
        // De Morgan
        MultiTrackDfa lhs = complement_within(product(a, b, BoolOp::And), valid);
        MultiTrackDfa rhs = minimize(product(complement_within(a, valid),
                                             complement_within(b, valid), BoolOp::Or));
        CHECK(lhs == rhs);
        // a and not a is empty
        CHECK(is_empty(product(a, complement_within(a, valid), BoolOp::And)));
        // a or empty is a
        MultiTrackDfa empty;
        empty.track_sizes = {2};
        empty.initial = 0;
        empty.accepting = {0};
        empty.delta.assign(2, MultiTrackDfa::kDead);
        CHECK(minimize(product(a, empty, BoolOp::Or)) == minimize(a));
    }
}

TEST_CASE("complement stays inside the validity universe") {
    const NumerationSystem& sys = dt_q();
    MultiTrackDfa addr = sys.addressing_dfa();
    MultiTrackDfa none;
    none.track_sizes = {sys.digit_count};
    none.initial = 0;
    none.accepting = {0};
    none.delta.assign(sys.digit_count, MultiTrackDfa::kDead);

    MultiTrackDfa everything_valid = complement_within(none, addr);
    CHECK(accepts_tracks(everything_valid, {"31"}));
    CHECK(accepts_tracks(everything_valid, {"0031"}));
    CHECK(!accepts_tracks(everything_valid, {"10"}));  // not a path
    CHECK(accepts_all_valid(everything_valid, addr));
    CHECK(is_empty(complement_within(everything_valid, addr)));
}

TEST_CASE("projection examples") {
    const NumerationSystem& sys = dt_q();
    MultiTrackDfa eq = sys.compare_dfa(CmpKind::Eq);
    MultiTrackDfa any = project_track(eq, 1);
    CHECK(accepts_all_valid(any, sys.addressing_dfa()));

    MultiTrackDfa add = sys.addition_dfa();
    MultiTrackDfa pairs = project_track(add, 2);
    for (unsigned long long x = 0; x <= 40; ++x)
        for (unsigned long long y = 0; y <= 40; ++y)
            CHECK(accepts_tracks(pairs, {sys.represent(x), sys.represent(y)}));

    MultiTrackDfa none;
    none.track_sizes = {4, 4};
    none.initial = 0;
    none.accepting = {0};
    none.delta.assign(16, MultiTrackDfa::kDead);
    CHECK(is_empty(project_track(none, 0)));
}

TEST_CASE("padding invariance of relation automata") {
    const NumerationSystem& sys = dt_q();
    MultiTrackDfa add = sys.addition_dfa();
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        unsigned long long x = rng() % 700, y = rng() % 700;
        unsigned long long z = rng() % 2 ? x + y : rng() % 1500;
        std::vector<std::string> t{sys.represent(x), sys.represent(y), sys.represent(z)};
        bool base = accepts_tracks(add, t);
        for (auto& s : t) s = "0" + s;
        CHECK(accepts_tracks(add, t) == base);
        CHECK(base == (x + y == z));
    }
}

TEST_CASE("retrack merges and permutes tracks") {
    const NumerationSystem& sys = dt_q();
    MultiTrackDfa add = sys.addition_dfa();
    // z = x + x via identifying the first two tracks
    std::vector<int> map_xxz{0, 0, 1};
    MultiTrackDfa doubling = retrack(add, map_xxz, 2);
    CHECK(accepts_tracks(doubling, {sys.represent(21), sys.represent(42)}));
    CHECK(!accepts_tracks(doubling, {sys.represent(21), sys.represent(43)}));
}

TEST_CASE("text format round trip") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 20; ++round) {
        MultiTrackDfa a = minimize(random_dfa(rng, 2, 2, 5));
        CHECK(dfa_from_text(dfa_to_text(a)) == a);
    }
    Dfao d = minimize(dt_q().word_dfao());
    CHECK(dfao_from_text(dfao_to_text(d)) == d);
}

TEST_CASE("word automaton runs") {
    Dfao d = minimize(dt_q().word_dfao());
    CHECK(d.shell.num_states() == 4);
    CHECK(d.run("") == 0);      // first letter of the word
    CHECK(d.run("31") == 1);    // position 5
    CHECK(d.run("300") == 0);   // position 7
    CHECK(d.run("10") == std::nullopt);  // dead: nothing follows a mark digit

    Word q = word_q(3000);
    const NumerationSystem& sys = dt_q();
    for (unsigned long long n = 0; n < 3000; ++n)
        CHECK(d.run(sys.represent(n)) == q[n] - '0');
}
