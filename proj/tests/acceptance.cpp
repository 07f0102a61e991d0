// Acceptance suite: one line per criterion, nonzero exit unless every
// non-conjectural criterion passes. Heavier than the unit tests; expects a
// release build.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "rote/checks.hpp"
#include "rote/search.hpp"
#include "rote/word.hpp"

using namespace rote;

namespace {

struct Gate {
    int failures = 0;

    void line(int index, const std::string& name, bool pass, const std::string& detail,
              bool conjectural = false) {
        const char* verdict = conjectural ? (pass ? "CONJECTURAL-PASS" : "CONJECTURAL-FAIL")
                                          : (pass ? "PASS" : "FAIL");
        std::printf("criterion-%02d %-28s %-16s %s\n", index, name.c_str(), verdict,
                    detail.c_str());
        std::fflush(stdout);
        if (!pass && !conjectural) ++failures;
    }
};

std::string brief(const CheckReport& r) {
    for (const auto& item : r.items)
        if (!item.ok) return "first failure: " + item.what + " expected " + item.expected +
                             ", observed " + item.observed;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu sub-checks, %.1fs", r.items.size(), r.seconds);
    return buf;
}

bool passed(const CheckReport& r) { return r.verdict == Verdict::Pass; }

}  // namespace

int main() {
    Gate gate;

    // 1: the strict tree bottoms out at depth 38 with the eight listed words
    CheckReport lower = run_check("lower-bound-38");
    gate.line(1, "lower-bound-38", passed(lower), brief(lower));

    // 2: sequence tables and recurrences of both systems
    {
        bool ok = true;
        std::string what = "tables a,b,c and a',b',c', polynomials";
        const NumerationSystem& h = dt_h();
        const NumerationSystem& q = dt_q();
        const long long a_n[6] = {1, 2, 4, 7, 12, 21};
        const long long b_n[6] = {1, 2, 3, 5, 9, 16};
        const long long c_n[6] = {1, 1, 2, 4, 7, 12};
        const long long ap[6] = {3, 4, 7, 13, 23, 40};
        const long long bp[6] = {1, 3, 6, 10, 17, 30};
        const long long cp[6] = {2, 3, 4, 7, 13, 23};
        Word bw = "b";
        Word bq = "b";
        for (int k = 0; k < 6; ++k) {
            ok = ok && h.seq_value(0, 1, k) == a_n[k] && h.seq_value(1, 1, k) == c_n[k];
            ok = ok && q.seq_value(0, 3, k) == ap[k] && q.seq_value(1, 3, k) == cp[k];
            ok = ok && static_cast<long long>(bw.size()) == b_n[k];
            ok = ok && static_cast<long long>(morphism_q_image().apply(bq).size()) == bp[k];
            bw = morphism_p_base().apply(bw);
            bq = morphism_p_base().apply(bq);
        }
        ok = ok && h.rec.char_poly == std::vector<long long>{-1, 1, -2, 1};
        ok = ok && q.rec.char_poly == std::vector<long long>{0, -1, 1, -2, 1};
        gate.line(2, "sequence-tables", ok, what);
    }

    // 3: rank-value consistency below 10^5 in both systems: the n-th word of
    // the language in radix order is represent(n) and evaluates to n
    {
        auto start = std::chrono::steady_clock::now();
        bool ok = true;
        for (const NumerationSystem* sys : {&dt_h(), &dt_q()}) {
            std::vector<std::string> words = radix_language(*sys, 100000);
            if (words.size() != 100000) ok = false;
            for (unsigned long long n = 0; n < words.size() && ok; ++n) {
                if (sys->represent(n) != words[n]) ok = false;
                if (sys->evaluate(words[n]) != static_cast<long long>(n)) ok = false;
            }
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char detail[96];
        std::snprintf(detail, sizeof detail,
                      "radix rank = represent, evaluate(rep(n))=n, n<100000, %.1fs", secs);
        gate.line(3, "numeration-soundness", ok, detail);
    }

    // 4: the word automaton agrees with the brute-force word everywhere below 10^5
    {
        const NumerationSystem& sys = dt_q();
        Dfao d = minimize(sys.word_dfao());
        Word q = word_q(100000);
        bool ok = true;
        for (unsigned long long n = 0; n < 100000 && ok; ++n) {
            auto out = d.run(sys.represent(n));
            if (!out || *out != q[n] - '0') ok = false;
        }
        char detail[96];
        std::snprintf(detail, sizeof detail, "sweep n<100000; minimized automaton has %zu states",
                      d.shell.num_states());
        gate.line(4, "word-automaton", ok, detail);
    }

    // 5: addition relation exact on the box plus all four algebraic laws
    CheckReport add = run_check("addition-verify");
    gate.line(5, "addition-automaton", passed(add), brief(add));

    // 6: no factor of exponent beyond 5/2
    CheckReport pf = run_check("power-free-52plus");
    gate.line(6, "power-free-52plus", passed(pf), brief(pf));

    // 7: factor complexity is 2n via equal linear representations
    CheckReport cx = run_check("complexity-2n");
    gate.line(7, "complexity-2n", passed(cx), brief(cx));

    // 8: uniform recurrence with gap bound 7n
    CheckReport uc = run_check("uniform-recurrence-7n");
    gate.line(8, "uniform-recurrence-7n", passed(uc), brief(uc));

    // 9: the unique exponent-5/2 factor
    CheckReport un = run_check("unique-52-power");
    gate.line(9, "unique-52-power", passed(un), brief(un));

    // 10: abelian complexity takes exactly the values 1..4
    CheckReport ab = run_check("abelian-1234");
    gate.line(10, "abelian-1234", passed(ab), brief(ab));

    // 11: thirty-two length-16 factors, none reversible, length 15 reversible
    CheckReport rv = run_check("reversible-15");
    gate.line(11, "reversible-15", passed(rv), brief(rv));

    // 12: conjectural 16n bound on the non-strict level counts
    CheckReport rig = run_check("rigidity-16n");
    gate.line(12, "rigidity-16n", rig.verdict == Verdict::ConjecturalPass, brief(rig),
              /*conjectural=*/rig.verdict != Verdict::Fail);

    if (gate.failures) {
        std::printf("%d criterion(s) failed\n", gate.failures);
        return 1;
    }
    std::printf("all non-conjectural criteria passed\n");
    return 0;
}
