#include <doctest.h>

#include <random>

#include "rote/checks.hpp"
#include "rote/compiler.hpp"
#include "rote/word.hpp"

using namespace rote;

TEST_CASE("parser shapes and free variables") {
    ParsedFormula p =
        parse_formula("At,u (t>=i & 2*t<=2*i+3*n & u=t+n) => Q[t]=Q[u]");
    CHECK(p.formula->free_variables() == std::set<std::string>{"i", "n"});
    CHECK(p.system_tag.empty());

    CHECK(parse_formula("Ax x=x").formula->free_variables().empty());
    CHECK(parse_formula("?msd_mor x=x").system_tag == "msd_mor");

    ParsedFormula call = parse_formula("$factoreq(i,i+p,n-p)");
    REQUIRE(call.formula->kind == Formula::Kind::Call);
    CHECK(call.formula->callee == "factoreq");
    REQUIRE(call.formula->args.size() == 3);
    CHECK(call.formula->args[1]->kind == Term::Kind::Add);
    CHECK(call.formula->args[2]->kind == Term::Kind::Sub);
    CHECK(call.formula->free_variables() == std::set<std::string>{"i", "n", "p"});
}

TEST_CASE("parser precedence and quantifier scope") {
    // & binds tighter than |, quantifiers grab everything to their right
    CHECK(to_string(*parse_formula("a=b & c=d | e=f").formula) ==
          "((a=b & c=d) | e=f)");
    CHECK(to_string(*parse_formula("~a=b & c=d").formula) == "(~a=b & c=d)");
    CHECK(to_string(*parse_formula("Ei x=i & Ah h>x => h=h").formula) ==
          "(Ei (x=i & (Ah (h>x => h=h))))");
    CHECK(to_string(*parse_formula("a=b => c=d <=> e=f").formula) ==
          "((a=b => c=d) <=> e=f)");

    CHECK_THROWS_AS(parse_formula("x * y = 1"), ParseError);
    CHECK_THROWS_AS(parse_formula("x = "), ParseError);
    CHECK_THROWS_AS(parse_formula("x==y"), ParseError);
}

TEST_CASE("compile equality and comparisons") {
    FormulaCompiler compiler(dt_q());
    Relation eq = compiler.compile_text("x=y");
    CHECK(eq.vars == std::vector<std::string>{"x", "y"});
    CHECK(compiler.member(eq, {9, 9}));
    CHECK(!compiler.member(eq, {9, 10}));

    Relation le = compiler.compile_text("x<=y");
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        unsigned long long x = rng() % 400, y = rng() % 400;
        CHECK(compiler.member(le, {x, y}) == (x <= y));
    }
}

TEST_CASE("compile arithmetic atoms") {
    FormulaCompiler compiler(dt_q());
    Relation sum = compiler.compile_text("u=t+n");
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        unsigned long long t = rng() % 300, n = rng() % 300;
        CHECK(compiler.member(sum, {n, t, t + n}));  // vars sorted: n, t, u
        CHECK(!compiler.member(sum, {n, t, t + n + 1}));
    }

    Relation mul = compiler.compile_text("y=3*x");
    for (unsigned long long x = 0; x < 120; ++x) {
        CHECK(compiler.member(mul, {x, 3 * x}));
        CHECK(!compiler.member(mul, {x, 3 * x + 1}));
    }

    Relation guarded = compiler.compile_text("y=x-3");
    for (unsigned long long x = 0; x < 50; ++x)
        for (unsigned long long y = 0; y < 50; ++y)
            CHECK(compiler.member(guarded, {x, y}) == (x >= 3 && y == x - 3));

    // an impossible difference is unsatisfiable, not an error
    CHECK(!compiler.eval_closed_text("Ei i+3=1"));
    CHECK(compiler.eval_closed_text("Ex x=x"));
}

TEST_CASE("sequence atoms against the word oracle") {
    FormulaCompiler compiler(dt_q());
    Word q = word_q(3000);
    Relation same = compiler.compile_text("Q[i]=Q[j]");
    Relation one = compiler.compile_text("Q[i]=1");
    std::mt19937_64 rng(11);
    for (int r = 0; r < 300; ++r) {
        unsigned long long i = rng() % 1000, j = rng() % 1000;
        CHECK(compiler.member(same, {i, j}) == (q[i] == q[j]));
        CHECK(compiler.member(one, {i}) == (q[i] == '1'));
    }
    // factor comparison at fixed offsets: q[0..1] = "01" vs q[3..4] = "00"
    Relation fe = compiler.compile_text("Au,v (u>=i & u<i+2 & u+j=v+i) => Q[u]=Q[v]");
    CHECK(!compiler.member(fe, {0, 3}));
    CHECK(compiler.member(fe, {2, 5}));  // q[2..3] = "10" = q[5..6]
}

TEST_CASE("quantifier duality") {
    FormulaCompiler compiler(dt_q());
    Relation forall = compiler.compile_text("Ax x<=y | x=y+z");
    Relation dual = compiler.compile_text("~Ex ~(x<=y | x=y+z)");
    CHECK(forall.vars == dual.vars);
    CHECK(minimize(forall.dfa) == minimize(dual.dfa));
}

TEST_CASE("predicate store") {
    FormulaCompiler compiler(dt_q());
    compiler.define_text("lt", "x<y");
    CHECK(compiler.store().at("lt").params == std::vector<std::string>{"x", "y"});
    CHECK_THROWS_AS(compiler.define_text("lt", "x<y"), std::invalid_argument);
    CHECK_THROWS_AS(compiler.compile_text("$nope(x)"), std::invalid_argument);
    CHECK_THROWS_AS(compiler.compile_text("$lt(x)"), std::invalid_argument);

    // call with permuted and repeated arguments
    Relation rel = compiler.compile_text("$lt(b,a) & $lt(b,b)");
    CHECK(is_empty(rel.dfa));  // x<x is empty
    Relation perm = compiler.compile_text("$lt(b,a)");
    CHECK(compiler.member(perm, {5, 3}));  // vars sorted (a,b): b<a
    CHECK(!compiler.member(perm, {3, 5}));

    // term arguments go through fresh helper variables
    compiler.define_text("sum3", "x+y=z");
    Relation shifted = compiler.compile_text("$sum3(a,2*a,b)");
    for (unsigned long long a = 0; a < 80; ++a) {
        CHECK(compiler.member(shifted, {a, 3 * a}));
        CHECK(!compiler.member(shifted, {a, 3 * a + 2}));
    }
}

TEST_CASE("closed formulas are stable under equivalent rewritings") {
    FormulaCompiler compiler(dt_q());
    CHECK(compiler.eval_closed_text("Ax,y (x<y) => (Ez x+z=y)") ==
          compiler.eval_closed_text("Ax,y ~(x<y) | (Ez x+z=y)"));
    CHECK(compiler.eval_closed_text("Ax x<=x+1"));
    CHECK(compiler.eval_closed_text("~Ex ~(x<=x+1)"));
}

TEST_CASE("the dt_h compiler addresses the base word") {
    FormulaCompiler compiler(dt_h());
    Word p = word_p_abc(2000);
    Relation is_c = compiler.compile_text("?msd_dt_h P[i]=2");
    for (unsigned long long i = 0; i < 300; ++i)
        CHECK(compiler.member(is_c, {i}) == (p[i] == 'c'));
}

TEST_CASE("eval_closed rejects free variables") {
    FormulaCompiler compiler(dt_q());
    CHECK_THROWS_AS(compiler.eval_closed_text("x=x"), std::invalid_argument);
    CHECK_THROWS_AS(compiler.compile_text("?msd_fib x=x"), std::invalid_argument);
    CHECK(compiler.eval_closed_text("?msd_mor Ex x=x"));
}

TEST_CASE("counting representations") {
    FormulaCompiler compiler(dt_q());
    LinearRepresentation twon = compiler.count_representation_text(formulas::kTwoN, "i");
    CHECK(linrep_value(twon, dt_q(), 7) == BigInt(14));
    CHECK(linrep_value(twon, dt_q(), 0) == BigInt(0));
    CHECK(linrep_value(twon, dt_q(), 1) == BigInt(2));

    // counted values agree with direct enumeration
    Relation rel = compiler.compile_text("n>=1 & (i<n | i=2*n)");
    LinearRepresentation lr = compiler.count_representation(rel, "i");
    for (unsigned long long n = 0; n <= 40; ++n) {
        unsigned long long direct = 0;
        for (unsigned long long i = 0; i <= 2 * n + 2; ++i)
            direct += compiler.member(rel, {i, n});
        CHECK(linrep_value(lr, dt_q(), n) == BigInt(static_cast<long long>(direct)));
    }

    // leading zeros leave values unchanged
    std::vector<int> plain{3, 1};  // represent(5)
    std::vector<int> padded{0, 0, 3, 1};
    CHECK(twon.value_symbols(plain) == twon.value_symbols(padded));
}

TEST_CASE("diverging counts are detected") {
    FormulaCompiler compiler(dt_q());
    CHECK_THROWS_AS(compiler.count_representation_text("n<=i", "i"), DivergingCountError);
}

TEST_CASE("linear representation equivalence") {
    FormulaCompiler compiler(dt_q());
    LinearRepresentation twon = compiler.count_representation_text(formulas::kTwoN, "i");
    LinearRepresentation same = compiler.count_representation_text("n>=1 & i<n+n", "i");
    LinearRepresentation shifted = compiler.count_representation_text("n>=1 & i<2*n+1", "i");
    CHECK(linrep_equal(twon, twon));
    CHECK(linrep_equal(twon, same));
    CHECK(!linrep_equal(twon, shifted));
}

TEST_CASE("script runner") {
    FormulaCompiler compiler(dt_q());
    ScriptResult r = run_script(compiler,
                                "# demo\n"
                                "def lt \"x<y\"\n"
                                "eval some \"Ex,y $lt(x,y)\"\n"
                                "def cnt n \"n>=1 & i<2*n\"\n"
                                "linrep-val cnt 7\n"
                                "linrep-eq cnt cnt\n");
    CHECK(r.ok);
    CHECK(r.output.find("eval some: TRUE") != std::string::npos);
    CHECK(r.output.find("linrep-val cnt 7: 14") != std::string::npos);
    CHECK(r.output.find("linrep-eq cnt cnt: EQUAL") != std::string::npos);

    ScriptResult bad = run_script(compiler, "frobnicate x\n");
    CHECK(!bad.ok);
    CHECK(bad.output.find("error") != std::string::npos);
}
