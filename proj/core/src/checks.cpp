#include "rote/checks.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rote/search.hpp"

namespace rote {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
        case Verdict::ConjecturalPass: return "CONJECTURAL-PASS";
        case Verdict::ConjecturalFail: return "CONJECTURAL-FAIL";
    }
    return "?";
}

namespace {

constexpr const char* kReference = "reference";
constexpr const char* kOracle = "oracle";
constexpr const char* kDefinition = "definition";

struct Builder {
    CheckReport report;

    void item(std::string what, std::string expected, std::string observed, const char* source) {
        bool ok = expected == observed;
        report.items.push_back({std::move(what), std::move(expected), std::move(observed), source, ok});
    }
    template <typename T>
    void eq(std::string what, const T& expected, const T& observed, const char* source) {
        std::ostringstream e, o;
        e << expected;
        o << observed;
        item(std::move(what), e.str(), o.str(), source);
    }
    void flag(std::string what, bool ok, const char* source) {
        report.items.push_back({std::move(what), "true", ok ? "true" : "false", source, ok});
    }
    void note(std::string text) { report.notes.push_back(std::move(text)); }
    void artifact(std::string name, const std::string& text) {
        std::ostringstream hex;
        hex << std::hex << fnv1a64(text);
        report.artifacts.emplace_back(std::move(name), hex.str());
    }
    bool ok() const {
        for (const auto& i : report.items)
            if (!i.ok) return false;
        return true;
    }
    CheckReport finish(bool conjectural = false) {
        if (conjectural)
            report.verdict = ok() ? Verdict::ConjecturalPass : Verdict::ConjecturalFail;
        else
            report.verdict = ok() ? Verdict::Pass : Verdict::Fail;
        return std::move(report);
    }
};

std::string seq_text(const std::vector<long long>& v) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    return out.str();
}

std::vector<long long> transition_sequence(const NumerationSystem& sys, int state, int digit,
                                           size_t count) {
    std::vector<long long> out;
    for (size_t k = 0; k < count; ++k) out.push_back(sys.seq_value(state, digit, k));
    return out;
}

// |image(base^n(letter))| by honest morphism iteration
std::vector<long long> iterated_image_lengths(const Morphism& base, const Morphism* image,
                                              char letter, size_t count) {
    std::vector<long long> out;
    Word w(1, letter);
    for (size_t k = 0; k < count; ++k) {
        out.push_back(static_cast<long long>(image ? image->apply(w).size() : w.size()));
        w = base.apply(w);
    }
    return out;
}

const std::vector<long long>& a005251_window() {
    // A005251 from its fourth term onward, the growth regime both length
    // sequences live in
    static const std::vector<long long> w = {1,   1,   2,   4,    7,    12,  21,
                                             37,  65,  114, 200,  351,  616, 1081,
                                             1897, 3329};
    return w;
}

const std::vector<long long>& a137495_window() {
    static const std::vector<long long> w = {2, 3, 4, 7, 13, 23, 40, 70, 122, 214};
    return w;
}

bool is_window_of(const std::vector<long long>& seq, const std::vector<long long>& window) {
    if (seq.size() > window.size()) return false;
    for (size_t off = 0; off + seq.size() <= window.size(); ++off) {
        bool ok = true;
        for (size_t i = 0; i < seq.size() && ok; ++i) ok = window[off + i] == seq[i];
        if (ok) return true;
    }
    return false;
}

size_t sweep_limit(const CheckOptions& opts, size_t dflt) {
    return opts.prefix_len ? opts.prefix_len : dflt;
}

// one compiler shared by the checks so each predicate is compiled once per
// process; checks run serially and results are deterministic either way
FormulaCompiler& shared_q_compiler() {
    static FormulaCompiler compiler(dt_q());
    return compiler;
}

void define_once(FormulaCompiler& compiler, const std::string& name, std::string_view text) {
    if (!compiler.store().has(name)) compiler.define_text(name, text);
}

// membership of a stored predicate at concrete arguments, declared order
bool predicate_member(FormulaCompiler& compiler, const std::string& name,
                      std::vector<unsigned long long> args) {
    const auto& entry = compiler.store().at(name);
    std::vector<std::string> sorted_vars = entry.params;
    std::sort(sorted_vars.begin(), sorted_vars.end());
    std::vector<unsigned long long> sorted_args(args.size());
    for (size_t i = 0; i < entry.params.size(); ++i) {
        size_t at = std::find(sorted_vars.begin(), sorted_vars.end(), entry.params[i]) -
                    sorted_vars.begin();
        sorted_args[at] = args[i];
    }
    // member() expects tracks in sorted order; re-track the stored automaton
    std::vector<int> old_to_new;
    for (const auto& v : entry.params)
        old_to_new.push_back(static_cast<int>(
            std::find(sorted_vars.begin(), sorted_vars.end(), v) - sorted_vars.begin()));
    Relation sorted_rel{sorted_vars,
                        retrack(entry.dfa, old_to_new, static_cast<int>(sorted_vars.size()))};
    return compiler.member(sorted_rel, sorted_args);
}

// word-core oracle for factor equality on a fixed prefix
bool oracle_factoreq(const Word& q, size_t i, size_t j, size_t n) {
    if (i + n > q.size() || j + n > q.size()) throw std::out_of_range("oracle_factoreq");
    return q.compare(i, n, q, j, n) == 0;
}

// ---------------------------------------------------------------------------
// the registered checks

CheckReport check_lower_bound_38(const CheckOptions&) {
    Builder b;
    SearchConfig cfg;
    cfg.threshold = Rational(5, 2);
    cfg.strict = true;
    SearchResult res = grow_tree(cfg);

    b.eq("maximum depth of the strict tree", size_t{38}, res.max_depth, kReference);
    b.flag("tree fully explored (not truncated)", !res.truncated, kDefinition);

    std::vector<Word> longest;
    for (const auto& w : res.maximal_words)
        if (w.size() == 38) longest.push_back(w);
    b.eq("maximal words of length 38", size_t{8}, longest.size(), kReference);

    const Word w1 = "00110011010011001001101001100100110010";
    const Word w2 = "00110011010011001001101001100100110011";
    auto contains = [&](const Word& w) {
        return std::find(longest.begin(), longest.end(), w) != longest.end();
    };
    b.flag("listed word ...110010 found", contains(w1), kReference);
    b.flag("listed word ...110011 found", contains(w2), kReference);
    b.eq("closure of the two listed words", size_t{8},
         symmetry_closure({w1, w2}).size(), kReference);

    // re-validate every maximal leaf with the naive oracles
    bool revalidated = true;
    for (const auto& w : res.maximal_words) {
        if (!is_rote(w) || has_factor_with_exponent(w, Rational(5, 2), false)) revalidated = false;
        for (char c : {'0', '1'}) {
            Word ext = w + c;
            if (is_rote(ext) && !has_factor_with_exponent(ext, Rational(5, 2), false))
                revalidated = false;
        }
    }
    b.flag("maximal leaves re-validated by naive oracles", revalidated, kOracle);
    return b.finish();
}

CheckReport check_build_dt_h(const CheckOptions& opts) {
    Builder b;
    const NumerationSystem& sys = dt_h();

    b.eq("addressing automaton states", std::string("a,b,c"),
         sys.state_names[0] + "," + sys.state_names[1] + "," + sys.state_names[2], kReference);
    b.eq("transition set",
         std::string("a0>a a1>b b0>c b1>b c0>a"), [&] {
             std::ostringstream out;
             bool first = true;
             for (size_t s = 0; s < sys.num_states(); ++s)
                 for (int d = 0; d < sys.digit_count; ++d) {
                     if (sys.next_state[s][d] < 0) continue;
                     if (!first) out << ' ';
                     first = false;
                     out << sys.state_names[s] << d << '>' << sys.state_names[sys.next_state[s][d]];
                 }
             return out.str();
         }(), kReference);

    b.eq("sequence on a -1-> b", std::string("1,2,4,7,12,21"),
         seq_text(transition_sequence(sys, 0, 1, 6)), kReference);
    b.eq("sequence on b -1-> b", std::string("1,1,2,4,7,12"),
         seq_text(transition_sequence(sys, 1, 1, 6)), kReference);
    b.eq("b-row of the length table", std::string("1,2,3,5,9,16"),
         seq_text(iterated_image_lengths(sys.base, nullptr, 'b', 6)), kOracle);
    b.eq("characteristic polynomial (constant first)", std::string("-1,1,-2,1"),
         seq_text(sys.rec.char_poly), kReference);
    b.eq("recurrence coefficients", std::string("2,-1,1"), seq_text(sys.rec.coeffs), kReference);
    b.flag("dominant root inside (1.75487766, 1.75487767)",
           sys.rec.root_low > Rational(175487766, 100000000) &&
               sys.rec.root_high < Rational(175487767, 100000000),
           kReference);

    b.flag("lengths |base^n(a)| match the a-sequence for n <= 15", [&] {
        auto direct = iterated_image_lengths(sys.base, nullptr, 'a', 16);
        for (size_t k = 0; k < 16; ++k)
            if (direct[k] != sys.seq_value(0, 1, k)) return false;
        return true;
    }(), kOracle);
    b.flag("a and c sequences sit inside the A005251 window",
           is_window_of(transition_sequence(sys, 0, 1, 10), a005251_window()) &&
               is_window_of(transition_sequence(sys, 1, 1, 10), a005251_window()),
           kReference);

    size_t limit = sweep_limit(opts, 100000);
    bool rank_value = true;
    for (unsigned long long n = 0; n < limit; ++n) {
        std::string rep = sys.represent(n);
        if (sys.evaluate(rep) != static_cast<long long>(n)) { rank_value = false; break; }
    }
    b.flag("evaluate(represent(n)) = n below " + std::to_string(limit), rank_value, kDefinition);

    auto words = radix_language(sys, std::min<size_t>(limit, 20000));
    bool radix_ok = true;
    for (size_t n = 0; n < words.size(); ++n)
        if (words[n] != sys.represent(n)) { radix_ok = false; break; }
    b.flag("represent agrees with direct radix enumeration", radix_ok, kOracle);

    b.artifact("dt_h.addressing", dfa_to_text(sys.addressing_dfa()));
    b.artifact("dt_h.sequence_automaton", sequence_automaton_to_text(sys));
    return b.finish();
}

CheckReport check_build_dt_q(const CheckOptions& opts) {
    Builder b;
    const NumerationSystem& sys = dt_q();

    b.eq("digit alphabet size", 4, sys.digit_count, kReference);
    b.eq("transition set",
         std::string("a0>a a1>mark a2>mark a3>b b0>c b1>mark b3>b c0>a c1>mark c2>mark"), [&] {
             std::ostringstream out;
             bool first = true;
             for (size_t s = 0; s < sys.num_states(); ++s)
                 for (int d = 0; d < sys.digit_count; ++d) {
                     if (sys.next_state[s][d] < 0) continue;
                     if (!first) out << ' ';
                     first = false;
                     out << sys.state_names[s] << d << '>' << sys.state_names[sys.next_state[s][d]];
                 }
             return out.str();
         }(), kReference);

    b.eq("inflated sequence on a -3-> b", std::string("3,4,7,13,23,40"),
         seq_text(transition_sequence(sys, 0, 3, 6)), kReference);
    b.eq("inflated sequence on b -3-> b", std::string("2,3,4,7,13,23"),
         seq_text(transition_sequence(sys, 1, 3, 6)), kReference);
    b.eq("inflated b-row", std::string("1,3,6,10,17,30"),
         seq_text(iterated_image_lengths(sys.base, &*sys.image, 'b', 6)), kReference);
    b.eq("increment sequences", std::string("1,0,0,0|2,0,0,0"),
         seq_text(transition_sequence(sys, 0, 1, 4)) + "|" +
             seq_text(transition_sequence(sys, 0, 2, 4)), kReference);
    b.eq("characteristic polynomial (constant first)", std::string("0,-1,1,-2,1"),
         seq_text(sys.rec.char_poly), kReference);
    b.flag("a' and c' sequences sit inside the A137495 window",
           is_window_of(transition_sequence(sys, 0, 3, 8), a137495_window()) &&
               is_window_of(transition_sequence(sys, 1, 3, 8), a137495_window()),
           kReference);
    b.flag("inflated lengths |image(base^n(a))| match the a'-sequence for n <= 15", [&] {
        auto direct = iterated_image_lengths(sys.base, &*sys.image, 'a', 16);
        for (size_t k = 0; k < 16; ++k)
            if (direct[k] != sys.seq_value(0, 3, k)) return false;
        return true;
    }(), kOracle);

    Dfao dfao = minimize(sys.word_dfao());
    b.eq("minimized word automaton states (informational target 4)", size_t{4},
         dfao.shell.num_states(), kReference);

    size_t limit = sweep_limit(opts, 100000);
    Word q = word_q(limit);
    bool sweep = true;
    bool rank_value = true;
    for (unsigned long long n = 0; n < limit; ++n) {
        std::string rep = sys.represent(n);
        if (sys.evaluate(rep) != static_cast<long long>(n)) rank_value = false;
        auto out = dfao.run(rep);
        if (!out || *out != q[n] - '0') sweep = false;
        if (!rank_value || !sweep) break;
    }
    b.flag("evaluate(represent(n)) = n below " + std::to_string(limit), rank_value, kDefinition);
    b.flag("word automaton output equals the brute-force word at every n below " +
               std::to_string(limit),
           sweep, kOracle);

    auto words = radix_language(sys, std::min<size_t>(limit, 20000));
    bool radix_ok = true;
    for (size_t n = 0; n < words.size(); ++n)
        if (words[n] != sys.represent(n)) { radix_ok = false; break; }
    b.flag("represent agrees with direct radix enumeration", radix_ok, kOracle);

    b.flag("the two word constructions agree on the prefix",
           word_q(limit) == word_q_from_marks(limit), kOracle);

    b.artifact("dt_q.addressing", dfa_to_text(sys.addressing_dfa()));
    b.artifact("dt_q.dfao", dfao_to_text(dfao));
    b.artifact("dt_q.sequence_automaton", sequence_automaton_to_text(sys));
    return b.finish();
}

CheckReport check_addition_verify(const CheckOptions& opts) {
    Builder b;
    const NumerationSystem& sys = dt_q();
    FormulaCompiler& compiler = shared_q_compiler();
    const MultiTrackDfa& add = compiler.addition();

    b.note("minimized addition relation has " + std::to_string(add.num_states()) +
           " states (informational reference value 143)");

    // the box plus the functionality law below gives the full "iff": the
    // correct sum is accepted and provably at most one z is ever accepted
    size_t box = sweep_limit(opts, 1500);
    bool box_ok = true;
    std::vector<std::string> reps(2 * box + 2);
    for (size_t i = 0; i < reps.size(); ++i) reps[i] = sys.represent(i);
    for (size_t x = 0; x <= box && box_ok; ++x)
        for (size_t y = 0; y <= box; ++y) {
            if (!accepts_tracks(add, {reps[x], reps[y], reps[x + y]})) { box_ok = false; break; }
            if (accepts_tracks(add, {reps[x], reps[y], reps[x + y + 1]})) { box_ok = false; break; }
            if (x + y >= 1 && accepts_tracks(add, {reps[x], reps[y], reps[x + y - 1]})) {
                box_ok = false;
                break;
            }
        }
    b.flag("x+y accepted and neighbours rejected on the box 0.." + std::to_string(box), box_ok,
           kOracle);

    b.flag("identity: Ax x+0=x", compiler.eval_closed_text("Ax x+0=x"), kDefinition);
    b.flag("commutativity", compiler.eval_closed_text("Ax,y,z (x+y=z) <=> (y+x=z)"), kDefinition);
    b.flag("totality", compiler.eval_closed_text("Ax,y Ez x+y=z"), kDefinition);
    b.flag("functionality", compiler.eval_closed_text("Ax,y,z,w (x+y=z & x+y=w) => z=w"),
           kDefinition);

    b.flag("2+3=5 accepted",
           accepts_tracks(add, {sys.represent(2), sys.represent(3), sys.represent(5)}), kOracle);
    b.flag("4+4=9 rejected",
           !accepts_tracks(add, {sys.represent(4), sys.represent(4), sys.represent(9)}), kOracle);

    b.artifact("dt_q.addition", dfa_to_text(add));
    return b.finish();
}

CheckReport check_power_free(const CheckOptions& opts) {
    Builder b;
    FormulaCompiler& compiler = shared_q_compiler();
    b.flag("no factor of exponent above 5/2 (decision procedure)",
           compiler.eval_closed_text(formulas::kCheck52Plus), kReference);

    size_t len = sweep_limit(opts, 20000);
    b.flag("oracle on the length-" + std::to_string(len) + " prefix",
           !has_factor_with_exponent(word_q(len), Rational(5, 2), true), kOracle);
    b.flag("oracle on the doubled prefix",
           !has_factor_with_exponent(word_q(2 * len), Rational(5, 2), true), kOracle);

    // the matrix of the inner formula is satisfiable, only the exponent
    // claim beyond 5/2 is excluded
    Relation inner = compiler.compile_text("n>=1 & At,u (t>=i & 2*t<=2*i+3*n & u=t+n) => Q[t]=Q[u]");
    b.flag("inner witness language empty", is_empty(inner.dfa), kDefinition);
    return b.finish();
}

CheckReport check_complexity_2n(const CheckOptions& opts) {
    Builder b;
    FormulaCompiler& compiler = shared_q_compiler();
    define_once(compiler, "factoreq", formulas::kFactorEq);
    b.note("factoreq: " + std::to_string(compiler.store().at("factoreq").dfa.num_states()) +
           " states (informational reference value 125)");

    Relation novel_rel = compiler.compile_text(formulas::kNovel);
    LinearRepresentation novel = compiler.count_representation(novel_rel, "i");
    LinearRepresentation twon =
        compiler.count_representation(compiler.compile_text(formulas::kTwoN), "i");
    b.note("novel relation: " + std::to_string(novel_rel.dfa.num_states()) +
           " states (informational reference value 120)");

    b.flag("novel and twon linear representations are equal", linrep_equal(novel, twon),
           kReference);

    bool values_ok = true;
    for (unsigned long long n = 1; n <= 200 && values_ok; ++n)
        if (linrep_value(novel, dt_q(), n) != BigInt(2 * static_cast<long long>(n)))
            values_ok = false;
    b.flag("novel value is 2n for 1 <= n <= 200", values_ok, kDefinition);

    size_t len = sweep_limit(opts, 5000);
    Word q1 = word_q(len), q2 = word_q(2 * len);
    bool oracle_ok = true;
    for (size_t n = 1; n <= 200 && oracle_ok; ++n) {
        size_t c1 = factor_complexity(q1, n), c2 = factor_complexity(q2, n);
        if (c1 != 2 * n || c2 != 2 * n) oracle_ok = false;
    }
    b.flag("prefix factor complexity is 2n for n <= 200 (with doubling)", oracle_ok, kOracle);

    // the printed variant of the first-occurrence bound counts infinitely
    // many positions per length; report it for transparency
    bool literal_diverges = false;
    try {
        compiler.count_representation(compiler.compile_text(formulas::kNovelLiteral), "i");
    } catch (const DivergingCountError&) {
        literal_diverges = true;
    }
    b.note(std::string("variant with bound j<n instead of j<i: ") +
           (literal_diverges ? "diverging count (rejected)" : "unexpectedly converged"));

    // random-tuple membership sweep against the word-core oracle
    {
        std::mt19937_64 rng(2024);
        bool sweep_ok = true;
        for (int r = 0; r < 300 && sweep_ok; ++r) {
            size_t i = rng() % 1200, j = rng() % 1200, n = rng() % 200;
            if (predicate_member(compiler, "factoreq", {i, j, n}) != oracle_factoreq(q1, i, j, n))
                sweep_ok = false;
        }
        b.flag("factoreq agrees with the word oracle on 300 random tuples", sweep_ok, kOracle);
    }

    b.artifact("factoreq", dfa_to_text(compiler.store().at("factoreq").dfa));
    b.artifact("novel.relation", dfa_to_text(novel_rel.dfa));
    return b.finish();
}

CheckReport check_unique_52_power(const CheckOptions& opts) {
    Builder b;
    FormulaCompiler& compiler = shared_q_compiler();
    define_once(compiler, "factoreq", formulas::kFactorEq);
    define_once(compiler, "per", formulas::kPer);
    define_once(compiler, "exp52", formulas::kExp52);
    b.note("per: " + std::to_string(compiler.store().at("per").dfa.num_states()) +
           " states (informational reference value 719)");
    b.note("exp52: " + std::to_string(compiler.store().at("exp52").dfa.num_states()) +
           " states (informational reference value 7)");

    b.flag("every exponent-5/2 factor is the length-10 one at position 11",
           compiler.eval_closed_text(formulas::kTestLength), kReference);

    Relation exp52{{"i", "n"}, compiler.store().at("exp52").dfa};
    b.flag("position 11, length 10 satisfies the exponent-5/2 relation",
           compiler.member(exp52, {11, 10}), kReference);

    // random-tuple membership sweeps against word-core oracles
    {
        Word q = word_q(4000);
        std::mt19937_64 rng(77);
        bool per_ok = true, exp_ok = true;
        for (int r = 0; r < 300; ++r) {
            size_t i = rng() % 1000, n = rng() % 120, p = rng() % 130;
            bool oracle = p >= 1 && p <= n && oracle_factoreq(q, i, i + p, n - p);
            if (predicate_member(compiler, "per", {i, n, p}) != oracle) per_ok = false;

            bool oracle52 = false;
            if (n % 5 == 0 && n >= 5) {
                size_t pp = 2 * n / 5;
                oracle52 = oracle_factoreq(q, i, i + pp, n - pp);
            }
            if (predicate_member(compiler, "exp52", {i, n}) != oracle52) exp_ok = false;
        }
        b.flag("per agrees with the word oracle on 300 random tuples", per_ok, kOracle);
        b.flag("exp52 agrees with the word oracle on 300 random tuples", exp_ok, kOracle);
    }

    size_t len = sweep_limit(opts, 20000);
    for (size_t L : {len, 2 * len}) {
        HalfIntegerPowers powers = exponent_five_halves_powers(word_q(L));
        bool all10 = true;
        bool at11 = false;
        for (auto [i, n] : powers.occurrences) {
            if (n != 10) all10 = false;
            if (i == 11 && n == 10) at11 = true;
        }
        std::string tag = " (prefix " + std::to_string(L) + ")";
        b.flag("all exponent-5/2 occurrences have length 10" + tag, all10, kOracle);
        b.flag("occurrence at position 11" + tag, at11, kOracle);
        b.eq("distinct exponent-5/2 factors" + tag, std::string("1001100110"),
             powers.factors.size() == 1 ? *powers.factors.begin() : std::string("<several>"),
             kOracle);
    }
    b.eq("the factor at position 11", std::string("1001100110"), word_q(21).substr(11, 10),
         kReference);
    return b.finish();
}

CheckReport check_uniform_recurrence(const CheckOptions& opts) {
    Builder b;
    FormulaCompiler& compiler = shared_q_compiler();
    define_once(compiler, "factoreq", formulas::kFactorEq);
    define_once(compiler, "nextgap", formulas::kNextGap);
    define_once(compiler, "maxgap", formulas::kMaxGap);
    b.note("nextgap: " + std::to_string(compiler.store().at("nextgap").dfa.num_states()) +
           " states (informational reference value 275)");
    b.note("maxgap: " + std::to_string(compiler.store().at("maxgap").dfa.num_states()) +
           " states (informational reference value 38)");

    b.flag("occurrence gaps bounded by 7n (decision procedure)",
           compiler.eval_closed_text(formulas::kUniformRecurrence), kReference);

    size_t len = sweep_limit(opts, 5000);
    Word q = word_q(len);
    bool oracle_ok = true;
    for (size_t n = 1; n <= 50 && oracle_ok; ++n) {
        RecurrenceGaps gaps = max_recurrence_gap(q, n);
        if (!gaps.conclusive() || gaps.max_gap > 7 * n) oracle_ok = false;
    }
    b.flag("oracle gaps below 7n for n <= 50", oracle_ok, kOracle);

    // random-tuple membership sweep for nextgap, and maxgap against the
    // prefix maxima (gap bound 7n keeps both inside the prefix)
    {
        std::mt19937_64 rng(99);
        bool ng_ok = true;
        for (int r = 0; r < 300 && ng_ok; ++r) {
            size_t i = rng() % 1000, n = 1 + rng() % 60, g = 1 + rng() % (7 * n + 2);
            size_t next = 0;
            for (size_t j = i + 1; j + n <= q.size(); ++j)
                if (oracle_factoreq(q, i, j, n)) { next = j - i; break; }
            bool oracle = next != 0 && g == next;
            if (predicate_member(compiler, "nextgap", {g, i, n}) != oracle) ng_ok = false;
        }
        b.flag("nextgap agrees with the word oracle on 300 random tuples", ng_ok, kOracle);

        bool mg_ok = true;
        for (size_t n = 1; n <= 25 && mg_ok; ++n) {
            size_t top = max_recurrence_gap(q, n).max_gap;
            if (!predicate_member(compiler, "maxgap", {top, n})) mg_ok = false;
            if (predicate_member(compiler, "maxgap", {top + 1, n})) mg_ok = false;
        }
        b.flag("maxgap matches the prefix maxima for n <= 25", mg_ok, kOracle);
    }
    return b.finish();
}

CheckReport check_abelian(const CheckOptions& opts) {
    Builder b;
    size_t nmax = sweep_limit(opts, 5000);
    Word q1 = word_q(10 * nmax), q2 = word_q(20 * nmax);
    bool in_range = true, saturated = true, one_beyond_zero = false;
    bool seen[6] = {false, false, false, false, false, false};
    seen[abelian_complexity(q1, 0)] = true;  // 1, the empty factor
    for (size_t n = 1; n <= nmax; ++n) {
        size_t v1 = abelian_complexity(q1, n);
        size_t v2 = abelian_complexity(q2, n);
        if (v1 != v2) saturated = false;
        if (v1 < 1 || v1 > 4) in_range = false;
        if (v1 == 1) one_beyond_zero = true;
        if (v1 <= 5) seen[v1] = true;
    }
    b.flag("values stay in {1,2,3,4} for n <= " + std::to_string(nmax), in_range, kReference);
    b.flag("all four values attained", seen[1] && seen[2] && seen[3] && seen[4], kReference);
    // equal zero-counts across every window of a length would force that
    // period, so an aperiodic word only shows value 1 on the empty factor
    b.flag("value 1 appears exactly at length 0", seen[1] && !one_beyond_zero, kOracle);
    b.flag("value 5 never observed", !seen[5], kReference);
    b.flag("doubled prefix agrees (saturation)", saturated, kOracle);
    return b.finish();
}

CheckReport check_reversible(const CheckOptions& opts) {
    Builder b;
    size_t len = sweep_limit(opts, 5000);
    for (size_t L : {len, 2 * len}) {
        Word q = word_q(L);
        std::string tag = " (prefix " + std::to_string(L) + ")";
        b.eq("distinct factors of length 16" + tag, size_t{32}, factor_complexity(q, 16),
             kReference);
        b.eq("reversible factors of length 16" + tag, size_t{0}, reversible_factors(q, 16).size(),
             kReference);
        b.flag("a reversible factor of length 15 exists" + tag,
               !reversible_factors(q, 15).empty(), kReference);
    }
    return b.finish();
}

CheckReport check_rigidity(const CheckOptions& opts) {
    Builder b;
    size_t nmax = sweep_limit(opts, 150);
    SearchConfig cfg;
    cfg.threshold = Rational(5, 2);
    cfg.strict = false;
    std::vector<size_t> counts = level_counts(cfg, nmax);

    bool lower_ok = true;
    for (size_t n = 1; n < counts.size(); ++n)
        if (counts[n] < 2 * n) lower_ok = false;
    b.flag("at least 2n words of every length (factors of the constructed word qualify)",
           lower_ok, kOracle);
    if (!lower_ok) {
        b.note("hard lower bound failed; reporting FAIL rather than a conjectural verdict");
        return b.finish();
    }

    bool bound_ok = counts.size() > nmax;
    size_t first_bad = 0;
    for (size_t n = 58; n <= nmax && n < counts.size(); ++n)
        if (counts[n] > 16 * n) {
            bound_ok = false;
            first_bad = n;
            break;
        }
    b.flag("count(n) <= 16n for 58 <= n <= " + std::to_string(nmax), bound_ok, kReference);
    if (first_bad) b.note("first violation at n = " + std::to_string(first_bad));
    b.note("the bound is reported as conjectural; it never gates the suite");
    return b.finish(/*conjectural=*/true);
}

using CheckFn = CheckReport (*)(const CheckOptions&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> r = {
        {"lower-bound-38", check_lower_bound_38},
        {"build-dt-h", check_build_dt_h},
        {"build-dt-q", check_build_dt_q},
        {"addition-verify", check_addition_verify},
        {"power-free-52plus", check_power_free},
        {"complexity-2n", check_complexity_2n},
        {"unique-52-power", check_unique_52_power},
        {"uniform-recurrence-7n", check_uniform_recurrence},
        {"abelian-1234", check_abelian},
        {"reversible-15", check_reversible},
        {"rigidity-16n", check_rigidity},
    };
    return r;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) {
        out.push_back(name);
        (void)fn;
    }
    return out;
}

CheckReport run_check(const std::string& name, const CheckOptions& opts) {
    for (const auto& [n, fn] : registry()) {
        if (n != name) continue;
        auto start = std::chrono::steady_clock::now();
        CheckReport report;
        try {
            report = fn(opts);
        } catch (const std::exception& e) {
            report.verdict = Verdict::Inconclusive;
            report.notes.push_back(std::string("aborted: ") + e.what());
        }
        report.name = name;
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
    throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckReport> run_all(const CheckOptions& opts) {
    std::vector<CheckReport> out;
    for (const auto& [name, fn] : registry()) {
        out.push_back(run_check(name, opts));
        (void)fn;
    }
    return out;
}

std::string report_text(const CheckReport& report) {
    std::ostringstream out;
    out << "[" << to_string(report.verdict) << "] " << report.name << "  ("
        << report.seconds << "s)\n";
    for (const auto& item : report.items) {
        out << "  " << (item.ok ? "ok " : "FAIL ") << item.what << ": expected " << item.expected
            << " (" << item.source << "), observed " << item.observed << "\n";
    }
    for (const auto& note : report.notes) out << "  note: " << note << "\n";
    for (const auto& [name, hash] : report.artifacts)
        out << "  artifact " << name << " fnv64=" << hash << "\n";
    return out.str();
}

std::string reports_json(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json items = nlohmann::json::array();
        for (const auto& i : r.items)
            items.push_back({{"what", i.what},
                             {"expected", i.expected},
                             {"observed", i.observed},
                             {"source", i.source},
                             {"ok", i.ok}});
        nlohmann::json artifacts = nlohmann::json::object();
        for (const auto& [name, hash] : r.artifacts) artifacts[name] = hash;
        arr.push_back({{"name", r.name},
                       {"verdict", to_string(r.verdict)},
                       {"items", items},
                       {"notes", r.notes},
                       {"artifacts", artifacts},
                       {"seconds", r.seconds}});
    }
    return arr.dump(2);
}

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Pass || r.verdict == Verdict::ConjecturalPass ||
            r.verdict == Verdict::ConjecturalFail)
            continue;
        return false;
    }
    return true;
}

}  // namespace rote
