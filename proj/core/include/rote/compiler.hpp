#pragma once

#include <map>
#include <string>
#include <vector>

#include "rote/automaton.hpp"
#include "rote/linrep.hpp"
#include "rote/logic.hpp"
#include "rote/numeration.hpp"

namespace rote {

// Automaton over a set of named variables; tracks follow the sorted order
// of vars and the language is a subset of the valid-padding universe.
struct Relation {
    std::vector<std::string> vars;  // sorted
    MultiTrackDfa dfa;
};

class PredicateStore {
public:
    struct Entry {
        std::vector<std::string> params;  // declared order = track order
        MultiTrackDfa dfa;
    };

    bool has(const std::string& name) const { return entries_.count(name) != 0; }
    const Entry& at(const std::string& name) const;
    void add(const std::string& name, Entry entry);  // throws on redefinition
    std::vector<std::string> names() const;

private:
    std::map<std::string, Entry> entries_;
};

// Compiles first-order formulas about one numeration system into automata.
// Sequence names Q, Mor and P all refer to the system's own word.
class FormulaCompiler {
public:
    explicit FormulaCompiler(const NumerationSystem& sys);

    const NumerationSystem& system() const { return sys_; }
    PredicateStore& store() { return store_; }
    const PredicateStore& store() const { return store_; }

    Relation compile(const Formula& f);
    Relation compile_text(std::string_view text);

    bool eval_closed(const Formula& f);
    bool eval_closed_text(std::string_view text);

    // declared parameter order; params must equal the formula's free variables
    void define(const std::string& name, std::vector<std::string> params, const Formula& f);
    // parameter order = alphabetical free variables
    void define_text(const std::string& name, std::string_view text);

    LinearRepresentation count_representation(const Formula& f, const std::string& counted);
    LinearRepresentation count_representation(const Relation& rel, const std::string& counted);
    LinearRepresentation count_representation_text(std::string_view text,
                                                   const std::string& counted);

    const MultiTrackDfa& addition();  // cached x + y = z relation

    // membership of concrete values, tracks in rel.vars order
    bool member(const Relation& rel, const std::vector<unsigned long long>& values) const;

    // boolean combinators on relations, exposed for tests and tools
    Relation conj(const Relation& a, const Relation& b);
    Relation disj(const Relation& a, const Relation& b);
    Relation negate(const Relation& a);
    Relation exists(Relation rel, const std::string& var);

private:
    const NumerationSystem& sys_;
    PredicateStore store_;
    MultiTrackDfa valid_;  // single-track addressing automaton
    Dfao word_;
    std::map<unsigned long long, MultiTrackDfa> const_cache_;
    std::map<CmpKind, MultiTrackDfa> cmp_cache_;
    std::map<std::string, MultiTrackDfa> misc_cache_;
    int fresh_counter_ = 0;

    std::string fresh_var();
    const MultiTrackDfa& cmp_automaton(CmpKind op);
    const MultiTrackDfa& const_automaton(unsigned long long c);
    const Dfao& sequence(const std::string& name) const;

    Relation align(const Relation& rel, const std::vector<std::string>& target, bool constrain_new);
    Relation combine(const Relation& a, const Relation& b, BoolOp op);
    Relation relation_true();

    struct TermVar {
        std::string var;
        bool fresh;
    };
    TermVar compile_term(const Term& t, std::vector<Relation>& constraints,
                         std::vector<std::string>& fresh);
    TermVar compile_mul(unsigned long long c, const TermVar& x, std::vector<Relation>& constraints,
                        std::vector<std::string>& fresh);
    Relation add_relation(const std::string& x, const std::string& y, const std::string& z);
    Relation finish_atom(Relation core, std::vector<Relation> constraints,
                         const std::vector<std::string>& fresh);

    Relation compile_cmp(const Formula& f);
    Relation compile_seqcmp(const Formula& f);
    Relation compile_call(const Formula& f);
    Relation compile_exists(const std::vector<std::string>& vars, const Formula& body,
                            bool negate_body);
};

// Runs a script: one command per line, '#' comments.
//   def <name> ["<formula>"] | def <name> (v1,..) "<formula>"
//   def <name> <param> "<formula>"        (linear representation, counted =
//                                          remaining free variable)
//   def <name> count <var> "<formula>"    (linear representation)
//   eval <name> "<formula>"
//   linrep-eq <name1> <name2>
//   linrep-val <name> <n>
//   export <name> <file>
struct ScriptResult {
    std::string output;
    bool ok = true;
};
ScriptResult run_script(FormulaCompiler& compiler, std::string_view text);

}  // namespace rote
