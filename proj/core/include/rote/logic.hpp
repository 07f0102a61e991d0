#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rote/numeration.hpp"

namespace rote {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(std::string msg, size_t pos)
        : std::runtime_error(std::move(msg) + " at position " + std::to_string(pos)), position(pos) {}
};

struct Term {
    enum class Kind { Var, Const, Add, Sub, Mul };
    Kind kind;
    std::string var;                  // Var
    unsigned long long value = 0;     // Const, and the multiplier for Mul
    std::unique_ptr<Term> lhs, rhs;   // Add/Sub; Mul uses lhs only

    static std::unique_ptr<Term> make_var(std::string name);
    static std::unique_ptr<Term> make_const(unsigned long long v);
    static std::unique_ptr<Term> make_add(std::unique_ptr<Term> a, std::unique_ptr<Term> b);
    static std::unique_ptr<Term> make_sub(std::unique_ptr<Term> a, std::unique_ptr<Term> b);
    static std::unique_ptr<Term> make_mul(unsigned long long c, std::unique_ptr<Term> t);
};

struct Formula {
    enum class Kind {
        And, Or, Not, Implies, Iff,
        Exists, Forall,
        Cmp,       // term REL term
        SeqCmp,    // NAME[term] (=|!=) NAME[term] or letter constant
        Call,      // $name(term, ...)
    };
    Kind kind;
    std::vector<std::unique_ptr<Formula>> children;
    std::vector<std::string> quantified;  // Exists/Forall

    CmpKind cmp = CmpKind::Eq;            // Cmp / SeqCmp (Eq or Ne only for SeqCmp)
    std::unique_ptr<Term> a, b;           // Cmp terms, SeqCmp index terms
    std::string seq_a, seq_b;             // SeqCmp sequence names; seq_b empty = letter constant
    int letter = 0;                       // SeqCmp letter constant when seq_b is empty
    std::string callee;                   // Call
    std::vector<std::unique_ptr<Term>> args;

    std::set<std::string> free_variables() const;
};

// Parses the surface syntax used throughout: quantifiers A/E with comma
// variable lists extending maximally to the right, ~ & | => <=> connectives
// in decreasing binding order, term comparisons, NAME[t] sequence indexing
// and $name(...) predicate calls. A leading "?ident" system tag is returned
// separately (empty if absent).
struct ParsedFormula {
    std::unique_ptr<Formula> formula;
    std::string system_tag;
};
ParsedFormula parse_formula(std::string_view text);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);

}  // namespace rote
