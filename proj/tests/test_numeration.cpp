#include <doctest.h>

#include "rote/numeration.hpp"
#include "rote/word.hpp"

using namespace rote;

TEST_CASE("incidence matrix and characteristic recurrence") {
    IncidenceMatrix m = incidence_matrix(morphism_p_base());
    REQUIRE(m.letters == std::vector<char>{'a', 'b', 'c'});
    CHECK(m.counts == std::vector<std::vector<long long>>{{1, 1, 0}, {0, 1, 1}, {1, 0, 0}});

    Recurrence rec = char_recurrence(m);
    CHECK(rec.char_poly == std::vector<long long>{-1, 1, -2, 1});  // X^3-2X^2+X-1
    CHECK(rec.coeffs == std::vector<long long>{2, -1, 1});

    // the middle length sequence obeys the recurrence: 2*3-2+1 = 5
    CHECK(2 * 3 - 2 + 1 == 5);

    Morphism unit = Morphism::parse("a -> a");
    CHECK_THROWS(dt_from_morphism(unit, 'a', "unit"));
    Recurrence one = char_recurrence(incidence_matrix(unit));
    CHECK(one.char_poly == std::vector<long long>{-1, 1});  // X-1
}

TEST_CASE("dt_h structure and sequences") {
    const NumerationSystem& sys = dt_h();
    REQUIRE(sys.num_states() == 3);
    CHECK(sys.digit_count == 2);
    CHECK(sys.next_state[0] == std::vector<int>{0, 1});   // a: 0->a, 1->b
    CHECK(sys.next_state[1] == std::vector<int>{2, 1});   // b: 0->c, 1->b
    CHECK(sys.next_state[2] == std::vector<int>{0, -1});  // c: 0->a

    long long a_n[6] = {1, 2, 4, 7, 12, 21};
    long long c_n[6] = {1, 1, 2, 4, 7, 12};
    for (size_t k = 0; k < 6; ++k) {
        CHECK(sys.seq_value(0, 1, k) == a_n[k]);
        CHECK(sys.seq_value(1, 1, k) == c_n[k]);
        CHECK(sys.seq_value(0, 0, k) == 0);
    }

    // dominant root enclosure pins the growth rate and excludes 1
    CHECK(sys.rec.root_low > Rational(175487766, 100000000));
    CHECK(sys.rec.root_high < Rational(175487767, 100000000));
}

TEST_CASE("dt_h evaluate and represent") {
    const NumerationSystem& sys = dt_h();
    CHECK(sys.evaluate("1000") == 7);
    CHECK(sys.evaluate("") == 0);
    CHECK(sys.represent(5) == "110");
    CHECK(sys.represent(0) == "");
    CHECK_THROWS_AS(sys.evaluate("01"), std::invalid_argument);  // leading zero
    CHECK_THROWS_AS(sys.evaluate("101"), std::invalid_argument); // c has no 1-edge
    for (unsigned long long n = 0; n < 10000; ++n)
        CHECK(sys.evaluate(sys.represent(n)) == static_cast<long long>(n));
}

TEST_CASE("dt_q structure matches the inflated construction") {
    const NumerationSystem& sys = dt_q();
    REQUIRE(sys.num_states() == 4);
    CHECK(sys.digit_count == 4);
    CHECK(sys.state_names == std::vector<std::string>{"a", "b", "c", "mark"});
    CHECK(sys.next_state[0] == std::vector<int>{0, 3, 3, 1});   // a: 0->a, 1,2->mark, 3->b
    CHECK(sys.next_state[1] == std::vector<int>{2, 3, -1, 1});  // b: 0->c, 1->mark, 3->b
    CHECK(sys.next_state[2] == std::vector<int>{0, 3, 3, -1});  // c: 0->a, 1,2->mark
    CHECK(sys.next_state[3] == std::vector<int>{-1, -1, -1, -1});

    CHECK(sys.rec.coeffs == std::vector<long long>{2, -1, 1, 0});
    CHECK(sys.rec.char_poly == std::vector<long long>{0, -1, 1, -2, 1});  // X^4-2X^3+X^2-X

    long long ap[6] = {3, 4, 7, 13, 23, 40};
    long long cp[6] = {2, 3, 4, 7, 13, 23};
    for (size_t k = 0; k < 6; ++k) {
        CHECK(sys.seq_value(0, 3, k) == ap[k]);
        CHECK(sys.seq_value(1, 3, k) == cp[k]);
    }
    CHECK(sys.seq_value(0, 1, 0) == 1);  // increments carry (i,0,0,...)
    CHECK(sys.seq_value(0, 2, 0) == 2);
    CHECK(sys.seq_value(0, 1, 1) == 0);
    CHECK(sys.seq_value(0, 2, 3) == 0);

    CHECK(sys.outputs == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("dt_q evaluate, represent and the word") {
    const NumerationSystem& sys = dt_q();
    CHECK(sys.evaluate("333") == 12);
    CHECK(sys.represent(5) == "31");
    CHECK(sys.represent(8) == "301");
    Dfao d = sys.word_dfao();
    CHECK(d.run("301") == 1);  // q[8]
    for (unsigned long long n = 0; n < 10000; ++n)
        CHECK(sys.evaluate(sys.represent(n)) == static_cast<long long>(n));
}

TEST_CASE("inflation rejects malformed mark morphisms") {
    Morphism bad_marks = Morphism::parse("a -> 1a2\nb -> b\nc -> c3");
    CHECK_THROWS_AS(inflate_for_image(dt_h(), morphism_q_image(), bad_marks,
                                      morphism_q_mark_out(), "bad"),
                    std::invalid_argument);
    Morphism mixed_out = Morphism::parse("a -> 0\nb -> 0\nc -> 0\n1 -> 1\n2 -> 0\n3 -> 1");
    CHECK_THROWS_AS(inflate_for_image(dt_h(), morphism_q_image(), morphism_q_marks(), mixed_out,
                                      "bad"),
                    std::invalid_argument);
}

TEST_CASE("constant recognizers") {
    const NumerationSystem& sys = dt_q();
    MultiTrackDfa zero = sys.constant_dfa(0);
    CHECK(accepts_tracks(zero, {""}));
    CHECK(accepts_tracks(zero, {"000"}));
    CHECK(!accepts_tracks(zero, {"1"}));

    MultiTrackDfa five = sys.constant_dfa(5);
    CHECK(accepts_tracks(five, {"31"}));
    CHECK(accepts_tracks(five, {"0031"}));
    CHECK(!accepts_tracks(five, {"30"}));
    CHECK(!accepts_tracks(five, {""}));

    MultiTrackDfa seven = dt_h().constant_dfa(7);
    CHECK(accepts_tracks(seven, {"1000"}));
    CHECK(accepts_tracks(seven, {"01000"}));
    CHECK(!accepts_tracks(seven, {"111"}));
}

TEST_CASE("value comparison automata") {
    const NumerationSystem& sys = dt_q();
    MultiTrackDfa lt = sys.compare_dfa(CmpKind::Lt);
    MultiTrackDfa ge = sys.compare_dfa(CmpKind::Ge);
    for (unsigned long long x = 0; x < 60; ++x)
        for (unsigned long long y = 0; y < 60; ++y) {
            std::vector<std::string> t{sys.represent(x), sys.represent(y)};
            CHECK(accepts_tracks(lt, t) == (x < y));
            CHECK(accepts_tracks(ge, t) == (x >= y));
        }
}

TEST_CASE("addition relation on both systems") {
    for (const NumerationSystem* sys : {&dt_h(), &dt_q()}) {
        MultiTrackDfa add = sys->addition_dfa();
        for (unsigned long long x = 0; x <= 60; ++x)
            for (unsigned long long y = 0; y <= 60; ++y) {
                CHECK(accepts_tracks(add, {sys->represent(x), sys->represent(y),
                                           sys->represent(x + y)}));
                CHECK(!accepts_tracks(add, {sys->represent(x), sys->represent(y),
                                            sys->represent(x + y + 1)}));
            }
        // x + 0 = x with an empty middle representation
        for (unsigned long long x = 0; x <= 100; ++x)
            CHECK(accepts_tracks(add, {sys->represent(x), "", sys->represent(x)}));
    }
    MultiTrackDfa add = dt_q().addition_dfa();
    CHECK(accepts_tracks(add, {dt_q().represent(2), dt_q().represent(3), dt_q().represent(5)}));
    CHECK(!accepts_tracks(add, {dt_q().represent(4), dt_q().represent(4), dt_q().represent(9)}));
}

TEST_CASE("synthesis cap raises instead of mis-building") {
    SynthesisOptions opts;
    opts.state_cap = 4;
    CHECK_THROWS_AS(dt_q().addition_dfa(opts), SynthesisError);
}

TEST_CASE("radix order equals value order") {
    const NumerationSystem& sys = dt_q();
    // all representations of length <= 4, sorted radix-style, enumerate 0..N
    std::vector<std::string> words{""};
    for (size_t len = 1; len <= 4; ++len) {
        std::vector<std::string> layer;
        for (unsigned long long n = 0;; ++n) {
            std::string rep = sys.represent(n);
            if (rep.size() > len) break;
            if (rep.size() == len) layer.push_back(rep);
        }
        std::vector<std::string> sorted = layer;
        std::sort(sorted.begin(), sorted.end());
        CHECK(layer == sorted);
        words.insert(words.end(), layer.begin(), layer.end());
    }
    for (size_t n = 0; n < words.size(); ++n) CHECK(sys.represent(n) == words[n]);
    for (size_t len = 0; len <= 4; ++len) {
        size_t count = 0;
        for (const auto& w : words) count += w.size() == len;
        CHECK(sys.count_of_length(len) == count);
    }
}

TEST_CASE("system file format round trip") {
    std::string text = system_to_text(dt_q());
    NumerationSystem back = system_from_text(text, "dt_q");
    CHECK(back.next_state == dt_q().next_state);
    CHECK(back.seq0 == dt_q().seq0);
    CHECK(back.outputs == dt_q().outputs);
    CHECK(back.rec.coeffs == dt_q().rec.coeffs);
    CHECK(system_to_text(back) == text);

    std::string seq_text = sequence_automaton_to_text(dt_h());
    CHECK(seq_text.find("recurrence 2 -1 1") != std::string::npos);
    CHECK(seq_text.find("seq 0 1 1 2 4") != std::string::npos);
}
