#include "rote/compiler.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace rote {

namespace {

// set ROTE_TRACE=1 to watch operation sizes while formulas compile
struct OpTrace {
    const char* op;
    size_t in_a, in_b;
    std::chrono::steady_clock::time_point start;

    OpTrace(const char* op_, size_t a, size_t b) : op(op_), in_a(a), in_b(b) {
        start = std::chrono::steady_clock::now();
    }
    void done(size_t out, size_t tracks) const {
        static const bool enabled = std::getenv("ROTE_TRACE") != nullptr;
        if (!enabled) return;
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
        std::fprintf(stderr, "[trace] %-8s %6zu x %-6zu -> %6zu states (%zu tracks, %.0f ms)\n",
                     op, in_a, in_b, out, tracks, ms);
    }
};

}  // namespace

const PredicateStore::Entry& PredicateStore::at(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw std::invalid_argument("unknown predicate: $" + name);
    return it->second;
}

void PredicateStore::add(const std::string& name, Entry entry) {
    if (!entries_.emplace(name, std::move(entry)).second)
        throw std::invalid_argument("predicate already defined: $" + name);
}

std::vector<std::string> PredicateStore::names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_) {
        out.push_back(k);
        (void)v;
    }
    return out;
}

FormulaCompiler::FormulaCompiler(const NumerationSystem& sys)
    : sys_(sys), valid_(sys.addressing_dfa()), word_(sys.word_dfao()) {}

std::string FormulaCompiler::fresh_var() { return "#" + std::to_string(fresh_counter_++); }

const Dfao& FormulaCompiler::sequence(const std::string& name) const {
    if (name == "Q" || name == "Mor" || name == "P") return word_;
    throw std::invalid_argument("unknown sequence name: " + name);
}

const MultiTrackDfa& FormulaCompiler::cmp_automaton(CmpKind op) {
    auto it = cmp_cache_.find(op);
    if (it == cmp_cache_.end()) it = cmp_cache_.emplace(op, sys_.compare_dfa(op)).first;
    return it->second;
}

const MultiTrackDfa& FormulaCompiler::const_automaton(unsigned long long c) {
    auto it = const_cache_.find(c);
    if (it == const_cache_.end()) it = const_cache_.emplace(c, sys_.constant_dfa(c)).first;
    return it->second;
}

const MultiTrackDfa& FormulaCompiler::addition() {
    auto it = misc_cache_.find("add");
    if (it == misc_cache_.end()) it = misc_cache_.emplace("add", sys_.addition_dfa()).first;
    return it->second;
}

Relation FormulaCompiler::relation_true() {
    MultiTrackDfa t;
    t.track_sizes = {};
    t.initial = 0;
    t.accepting = {1};
    t.delta = {0};
    return Relation{{}, std::move(t)};
}

// ---------------------------------------------------------------------------
// alignment and boolean structure

Relation FormulaCompiler::align(const Relation& rel, const std::vector<std::string>& target,
                                bool constrain_new) {
    if (rel.vars == target) return rel;
    std::vector<int> positions(rel.vars.size());
    for (size_t i = 0; i < rel.vars.size(); ++i) {
        auto it = std::find(target.begin(), target.end(), rel.vars[i]);
        if (it == target.end()) throw std::logic_error("align: variable missing from target");
        positions[i] = static_cast<int>(it - target.begin());
    }
    if (constrain_new) {
        return Relation{target, embed(rel.dfa, positions, static_cast<int>(target.size()), valid_)};
    }
    // pure cylindrification: new tracks unconstrained; only valid as an
    // intermediate on the narrow side of a conjunction
    MultiTrackDfa out;
    out.track_sizes.assign(target.size(), sys_.digit_count);
    const int S_new = out.num_symbols();
    const int S_old = rel.dfa.num_symbols();
    out.initial = rel.dfa.initial;
    out.accepting = rel.dfa.accepting;
    out.delta.assign(rel.dfa.num_states() * static_cast<size_t>(S_new), MultiTrackDfa::kDead);
    std::vector<int> dnew(target.size()), dold(rel.vars.size());
    for (int sym = 0; sym < S_new; ++sym) {
        out.unpack(sym, dnew);
        for (size_t i = 0; i < positions.size(); ++i) dold[i] = dnew[positions[i]];
        int old_sym = rel.dfa.pack(dold);
        for (size_t s = 0; s < rel.dfa.num_states(); ++s)
            out.delta[s * S_new + sym] = rel.dfa.delta[s * S_old + old_sym];
    }
    return Relation{target, std::move(out)};
}

Relation FormulaCompiler::combine(const Relation& a, const Relation& b, BoolOp op) {
    std::vector<std::string> vars;
    std::set_union(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(),
                   std::back_inserter(vars));
    // under conjunction each operand's own tracks constrain validity, so the
    // extension tracks can stay free; any negative or disjunctive use needs
    // explicit validity on the added tracks
    bool constrain_a = op == BoolOp::Or || op == BoolOp::Xor || op == BoolOp::Diff;
    bool constrain_b = op == BoolOp::Or || op == BoolOp::Xor;
    Relation ea = align(a, vars, constrain_a);
    Relation eb = align(b, vars, constrain_b);
    OpTrace trace("product", ea.dfa.num_states(), eb.dfa.num_states());
    Relation out{vars, minimize(product(ea.dfa, eb.dfa, op))};
    trace.done(out.dfa.num_states(), vars.size());
    return out;
}

Relation FormulaCompiler::conj(const Relation& a, const Relation& b) {
    return combine(a, b, BoolOp::And);
}
Relation FormulaCompiler::disj(const Relation& a, const Relation& b) {
    return combine(a, b, BoolOp::Or);
}

Relation FormulaCompiler::negate(const Relation& a) {
    OpTrace trace("negate", a.dfa.num_states(), 0);
    Relation out{a.vars, complement_within(a.dfa, valid_)};
    trace.done(out.dfa.num_states(), a.vars.size());
    return out;
}

Relation FormulaCompiler::exists(Relation rel, const std::string& var) {
    auto it = std::find(rel.vars.begin(), rel.vars.end(), var);
    if (it == rel.vars.end()) return rel;  // quantifying an unused variable
    int track = static_cast<int>(it - rel.vars.begin());
    OpTrace trace("project", rel.dfa.num_states(), 0);
    rel.dfa = project_track(rel.dfa, track);
    rel.vars.erase(it);
    trace.done(rel.dfa.num_states(), rel.vars.size());
    return rel;
}

// ---------------------------------------------------------------------------
// terms

Relation FormulaCompiler::add_relation(const std::string& x, const std::string& y,
                                       const std::string& z) {
    std::vector<std::string> vars{x, y, z};
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    auto pos = [&](const std::string& v) {
        return static_cast<int>(std::find(vars.begin(), vars.end(), v) - vars.begin());
    };
    std::vector<int> old_to_new{pos(x), pos(y), pos(z)};
    return Relation{vars,
                    minimize(retrack(addition(), old_to_new, static_cast<int>(vars.size())))};
}

FormulaCompiler::TermVar FormulaCompiler::compile_mul(unsigned long long c, const TermVar& x,
                                                      std::vector<Relation>& constraints,
                                                      std::vector<std::string>& fresh) {
    if (c == 1) return x;
    // balanced chain: c*x = (c/2)*x + (c/2)*x (+ x when odd)
    TermVar half = compile_mul(c / 2, x, constraints, fresh);
    std::string doubled = fresh_var();
    fresh.push_back(doubled);
    constraints.push_back(add_relation(half.var, half.var, doubled));
    if (c % 2 == 0) return {doubled, true};
    std::string out = fresh_var();
    fresh.push_back(out);
    constraints.push_back(add_relation(doubled, x.var, out));
    return {out, true};
}

FormulaCompiler::TermVar FormulaCompiler::compile_term(const Term& t,
                                                       std::vector<Relation>& constraints,
                                                       std::vector<std::string>& fresh) {
    switch (t.kind) {
        case Term::Kind::Var:
            return {t.var, false};
        case Term::Kind::Const: {
            std::string v = fresh_var();
            fresh.push_back(v);
            constraints.push_back(Relation{{v}, const_automaton(t.value)});
            return {v, true};
        }
        case Term::Kind::Add: {
            TermVar a = compile_term(*t.lhs, constraints, fresh);
            TermVar b = compile_term(*t.rhs, constraints, fresh);
            std::string v = fresh_var();
            fresh.push_back(v);
            constraints.push_back(add_relation(a.var, b.var, v));
            return {v, true};
        }
        case Term::Kind::Sub: {
            // v = a - b holds iff v + b = a; an impossible difference leaves
            // the atom unsatisfiable rather than failing
            TermVar a = compile_term(*t.lhs, constraints, fresh);
            TermVar b = compile_term(*t.rhs, constraints, fresh);
            std::string v = fresh_var();
            fresh.push_back(v);
            constraints.push_back(add_relation(v, b.var, a.var));
            return {v, true};
        }
        case Term::Kind::Mul: {
            if (t.value == 0) {
                std::string v = fresh_var();
                fresh.push_back(v);
                constraints.push_back(Relation{{v}, const_automaton(0)});
                return {v, true};
            }
            TermVar x = compile_term(*t.lhs, constraints, fresh);
            return compile_mul(t.value, x, constraints, fresh);
        }
    }
    throw std::logic_error("compile_term: bad kind");
}

// conjoin the core atom with its term constraints, projecting every helper
// variable as soon as the remaining work no longer mentions it
Relation FormulaCompiler::finish_atom(Relation core, std::vector<Relation> constraints,
                                      const std::vector<std::string>& fresh) {
    Relation acc = std::move(core);
    while (!constraints.empty()) {
        // prefer a constraint sharing a variable with acc
        size_t pick = 0;
        for (size_t i = 0; i < constraints.size(); ++i) {
            bool shares = false;
            for (const auto& v : constraints[i].vars)
                if (std::binary_search(acc.vars.begin(), acc.vars.end(), v)) shares = true;
            if (shares) { pick = i; break; }
        }
        Relation next = std::move(constraints[pick]);
        constraints.erase(constraints.begin() + pick);
        acc = conj(acc, next);
        for (const auto& v : fresh) {
            if (!std::binary_search(acc.vars.begin(), acc.vars.end(), v)) continue;
            bool pending = false;
            for (const auto& c : constraints)
                for (const auto& w : c.vars)
                    if (w == v) pending = true;
            if (!pending) acc = exists(std::move(acc), v);
        }
    }
    for (const auto& v : fresh) acc = exists(std::move(acc), v);
    return acc;
}

// ---------------------------------------------------------------------------
// atoms

namespace {

// flatten a {+, literal*var} tree into var -> coefficient; nullopt if the
// term has any other shape
bool flatten_linear(const Term& t, long long scale, std::map<std::string, long long>& out) {
    switch (t.kind) {
        case Term::Kind::Var:
            out[t.var] += scale;
            return true;
        case Term::Kind::Add:
            return flatten_linear(*t.lhs, scale, out) && flatten_linear(*t.rhs, scale, out);
        case Term::Kind::Mul:
            if (t.value > 64) return false;
            return flatten_linear(*t.lhs, scale * static_cast<long long>(t.value), out);
        default:
            return false;
    }
}

}  // namespace

Relation FormulaCompiler::compile_cmp(const Formula& f) {
    // equalities between sums of scaled variables go through one carry
    // relation instead of a chain of products
    if (f.cmp == CmpKind::Eq) {
        std::map<std::string, long long> lin;
        if (flatten_linear(*f.a, 1, lin) && flatten_linear(*f.b, -1, lin)) {
            std::vector<std::string> vars;
            std::vector<long long> coeffs;
            std::string key = "lin";
            for (auto& [v, c] : lin) {
                vars.push_back(v);
                coeffs.push_back(c);
                key += "," + std::to_string(c);
            }
            auto it = misc_cache_.find(key);
            if (it == misc_cache_.end())
                it = misc_cache_.emplace(key, sys_.linear_eq_dfa(coeffs)).first;
            return Relation{vars, it->second};
        }
    }
    std::vector<Relation> constraints;
    std::vector<std::string> fresh;
    TermVar a = compile_term(*f.a, constraints, fresh);
    TermVar b = compile_term(*f.b, constraints, fresh);

    Relation core;
    if (a.var == b.var) {
        // x ~ x: truth depends only on the operator
        bool truth = f.cmp == CmpKind::Eq || f.cmp == CmpKind::Le || f.cmp == CmpKind::Ge;
        core = relation_true();
        if (!truth) core.dfa.accepting = {0};
        std::vector<int> no_positions;
        Relation one{{a.var}, embed(core.dfa, no_positions, 1, valid_)};
        core = std::move(one);
    } else {
        std::vector<std::string> vars{a.var, b.var};
        std::sort(vars.begin(), vars.end());
        std::vector<int> old_to_new{a.var == vars[0] ? 0 : 1, b.var == vars[0] ? 0 : 1};
        core = Relation{vars, retrack(cmp_automaton(f.cmp), old_to_new, 2)};
    }
    return finish_atom(std::move(core), std::move(constraints), fresh);
}

Relation FormulaCompiler::compile_seqcmp(const Formula& f) {
    std::vector<Relation> constraints;
    std::vector<std::string> fresh;
    TermVar a = compile_term(*f.a, constraints, fresh);
    const Dfao& da = sequence(f.seq_a);
    bool want_equal = f.cmp == CmpKind::Eq;

    Relation core;
    if (f.seq_b.empty()) {
        // SEQ[t] = letter
        MultiTrackDfa m = da.shell;
        for (size_t s = 0; s < m.num_states(); ++s)
            m.accepting[s] = (da.outputs[s] == f.letter) == want_equal;
        core = Relation{{a.var}, minimize(m)};
    } else {
        TermVar b = compile_term(*f.b, constraints, fresh);
        const Dfao& db = sequence(f.seq_b);
        if (a.var == b.var) {
            // same position: outputs trivially equal
            MultiTrackDfa m = da.shell;
            for (size_t s = 0; s < m.num_states(); ++s) m.accepting[s] = want_equal;
            core = Relation{{a.var}, minimize(m)};
        } else {
            MultiTrackDfa pair;
            pair.track_sizes = {sys_.digit_count, sys_.digit_count};
            const int D = sys_.digit_count;
            size_t na = da.shell.num_states(), nb = db.shell.num_states();
            pair.accepting.assign(na * nb, 0);
            pair.delta.assign(na * nb * static_cast<size_t>(D) * D, MultiTrackDfa::kDead);
            pair.initial = da.shell.initial * nb + db.shell.initial;
            for (size_t sa = 0; sa < na; ++sa)
                for (size_t sb = 0; sb < nb; ++sb) {
                    size_t from = sa * nb + sb;
                    pair.accepting[from] = (da.outputs[sa] == db.outputs[sb]) == want_equal;
                    for (int dx = 0; dx < D; ++dx)
                        for (int dy = 0; dy < D; ++dy) {
                            uint32_t ta = da.shell.next(static_cast<uint32_t>(sa), dx);
                            uint32_t tb = db.shell.next(static_cast<uint32_t>(sb), dy);
                            if (ta == MultiTrackDfa::kDead || tb == MultiTrackDfa::kDead) continue;
                            pair.delta[from * D * D + dx * D + dy] = ta * nb + tb;
                        }
                }
            std::vector<std::string> vars{a.var, b.var};
            std::sort(vars.begin(), vars.end());
            std::vector<int> old_to_new{a.var == vars[0] ? 0 : 1, b.var == vars[0] ? 0 : 1};
            core = Relation{vars, minimize(retrack(pair, old_to_new, 2))};
        }
    }
    return finish_atom(std::move(core), std::move(constraints), fresh);
}

namespace {

// split a (possibly negated) formula into conjuncts, pushing the negation
// through the connectives that turn into conjunctions
void flatten_conjuncts(const Formula& f, bool negated,
                       std::vector<std::pair<const Formula*, bool>>& out) {
    if (!negated && f.kind == Formula::Kind::And) {
        flatten_conjuncts(*f.children[0], false, out);
        flatten_conjuncts(*f.children[1], false, out);
        return;
    }
    if (negated && f.kind == Formula::Kind::Or) {
        flatten_conjuncts(*f.children[0], true, out);
        flatten_conjuncts(*f.children[1], true, out);
        return;
    }
    if (negated && f.kind == Formula::Kind::Implies) {
        flatten_conjuncts(*f.children[0], false, out);
        flatten_conjuncts(*f.children[1], true, out);
        return;
    }
    if (f.kind == Formula::Kind::Not) {
        flatten_conjuncts(*f.children[0], !negated, out);
        return;
    }
    out.emplace_back(&f, negated);
}

}  // namespace

// Quantifier elimination with mini-scoping: each variable is projected from
// the conjunction of just the conjuncts that mention it, so functionally
// determined helpers disappear before the full product is ever formed.
Relation FormulaCompiler::compile_exists(const std::vector<std::string>& vars,
                                         const Formula& body, bool negate_body) {
    std::vector<std::pair<const Formula*, bool>> parts;
    flatten_conjuncts(body, negate_body, parts);

    std::vector<Relation> pool;
    for (auto [node, neg] : parts) {
        Relation r = compile(*node);
        pool.push_back(neg ? negate(r) : std::move(r));
    }

    auto mentions = [](const Relation& r, const std::string& v) {
        return std::binary_search(r.vars.begin(), r.vars.end(), v);
    };
    std::vector<std::string> remaining = vars;
    while (!remaining.empty()) {
        // eliminate the variable with the smallest bucket first
        size_t best = remaining.size();
        size_t best_count = SIZE_MAX, best_states = SIZE_MAX;
        for (size_t i = 0; i < remaining.size(); ++i) {
            size_t count = 0, states = 0;
            for (const auto& r : pool)
                if (mentions(r, remaining[i])) {
                    ++count;
                    states += r.dfa.num_states();
                }
            if (count == 0) {
                best = i;
                best_count = 0;
                break;
            }
            if (count < best_count || (count == best_count && states < best_states)) {
                best = i;
                best_count = count;
                best_states = states;
            }
        }
        std::string v = remaining[best];
        remaining.erase(remaining.begin() + best);
        if (best_count == 0) continue;

        std::vector<Relation> bucket;
        for (size_t i = pool.size(); i-- > 0;) {
            if (mentions(pool[i], v)) {
                bucket.push_back(std::move(pool[i]));
                pool.erase(pool.begin() + i);
            }
        }
        std::sort(bucket.begin(), bucket.end(), [](const Relation& a, const Relation& b) {
            return a.dfa.num_states() < b.dfa.num_states();
        });
        Relation merged = std::move(bucket[0]);
        for (size_t i = 1; i < bucket.size(); ++i) merged = conj(merged, bucket[i]);
        pool.push_back(exists(std::move(merged), v));
    }

    std::sort(pool.begin(), pool.end(), [](const Relation& a, const Relation& b) {
        return a.dfa.num_states() < b.dfa.num_states();
    });
    Relation acc = std::move(pool[0]);
    for (size_t i = 1; i < pool.size(); ++i) acc = conj(acc, pool[i]);
    return acc;
}

Relation FormulaCompiler::compile_call(const Formula& f) {
    const auto& entry = store_.at(f.callee);
    if (entry.params.size() != f.args.size())
        throw std::invalid_argument("predicate $" + f.callee + " expects " +
                                    std::to_string(entry.params.size()) + " arguments");
    std::vector<Relation> constraints;
    std::vector<std::string> fresh;
    std::vector<std::string> arg_vars;
    for (const auto& arg : f.args)
        arg_vars.push_back(compile_term(*arg, constraints, fresh).var);

    std::vector<std::string> vars = arg_vars;
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::vector<int> old_to_new;
    for (const auto& v : arg_vars)
        old_to_new.push_back(
            static_cast<int>(std::find(vars.begin(), vars.end(), v) - vars.begin()));
    Relation core{vars,
                  minimize(retrack(entry.dfa, old_to_new, static_cast<int>(vars.size())))};
    return finish_atom(std::move(core), std::move(constraints), fresh);
}

// ---------------------------------------------------------------------------
// formulas

Relation FormulaCompiler::compile(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::And:
            return conj(compile(*f.children[0]), compile(*f.children[1]));
        case Formula::Kind::Or:
            return disj(compile(*f.children[0]), compile(*f.children[1]));
        case Formula::Kind::Not:
            return negate(compile(*f.children[0]));
        case Formula::Kind::Implies:
            return disj(negate(compile(*f.children[0])), compile(*f.children[1]));
        case Formula::Kind::Iff: {
            Relation a = compile(*f.children[0]);
            Relation b = compile(*f.children[1]);
            return disj(conj(a, b), conj(negate(a), negate(b)));
        }
        case Formula::Kind::Exists:
            return compile_exists(f.quantified, *f.children[0], /*negate_body=*/false);
        case Formula::Kind::Forall:
            // A x phi  =  ~(E x ~phi)
            return negate(compile_exists(f.quantified, *f.children[0], /*negate_body=*/true));
        case Formula::Kind::Cmp:
            return compile_cmp(f);
        case Formula::Kind::SeqCmp:
            return compile_seqcmp(f);
        case Formula::Kind::Call:
            return compile_call(f);
    }
    throw std::logic_error("compile: bad kind");
}

namespace {

void check_system_tag(const NumerationSystem& sys, const std::string& tag) {
    if (tag.empty()) return;
    std::string t = tag;
    if (t.rfind("msd_", 0) == 0) t = t.substr(4);
    if (t == sys.name) return;
    if (t == "mor" && sys.name == "dt_q") return;  // alias used by the scripts
    throw std::invalid_argument("formula addresses numeration system '" + tag +
                                "' but the compiler is bound to '" + sys.name + "'");
}

}  // namespace

Relation FormulaCompiler::compile_text(std::string_view text) {
    ParsedFormula p = parse_formula(text);
    check_system_tag(sys_, p.system_tag);
    return compile(*p.formula);
}

bool FormulaCompiler::eval_closed(const Formula& f) {
    if (!f.free_variables().empty())
        throw std::invalid_argument("eval_closed: formula has free variables");
    Relation r = compile(f);
    return !is_empty(r.dfa);
}

bool FormulaCompiler::eval_closed_text(std::string_view text) {
    ParsedFormula p = parse_formula(text);
    check_system_tag(sys_, p.system_tag);
    return eval_closed(*p.formula);
}

void FormulaCompiler::define(const std::string& name, std::vector<std::string> params,
                             const Formula& f) {
    std::set<std::string> free = f.free_variables();
    if (std::set<std::string>(params.begin(), params.end()) != free)
        throw std::invalid_argument("define $" + name +
                                    ": parameters must match the free variables");
    Relation rel = compile(f);
    // permute the sorted compile order onto the declared order
    std::vector<int> old_to_new;
    for (const auto& v : rel.vars)
        old_to_new.push_back(
            static_cast<int>(std::find(params.begin(), params.end(), v) - params.begin()));
    PredicateStore::Entry entry;
    entry.dfa = retrack(rel.dfa, old_to_new, static_cast<int>(params.size()));
    entry.params = std::move(params);
    store_.add(name, std::move(entry));
}

void FormulaCompiler::define_text(const std::string& name, std::string_view text) {
    ParsedFormula p = parse_formula(text);
    check_system_tag(sys_, p.system_tag);
    std::set<std::string> free = p.formula->free_variables();
    define(name, std::vector<std::string>(free.begin(), free.end()), *p.formula);
}

// ---------------------------------------------------------------------------
// counting

LinearRepresentation FormulaCompiler::count_representation(const Formula& f,
                                                           const std::string& counted) {
    return count_representation(compile(f), counted);
}

LinearRepresentation FormulaCompiler::count_representation(const Relation& rel,
                                                           const std::string& counted) {
    auto it = std::find(rel.vars.begin(), rel.vars.end(), counted);
    if (it == rel.vars.end())
        throw std::invalid_argument("count_representation: counted variable is not free");
    const int ci = static_cast<int>(it - rel.vars.begin());
    const MultiTrackDfa& m = rel.dfa;
    const int k = m.num_tracks();
    const int D = sys_.digit_count;
    const size_t d = m.num_states();

    LinearRepresentation lr;
    for (int i = 0; i < k; ++i)
        if (i != ci) {
            lr.params.push_back(rel.vars[i]);
            lr.param_sizes.push_back(m.track_sizes[i]);
        }
    const int Sp = lr.num_symbols();

    // mu[p][s][t] = number of counted digits leading s to t under parameter
    // column p; trimming is already done by minimize (useless states are dead)
    lr.mu.assign(Sp, std::vector<long long>(d * d, 0));
    std::vector<long long> pad(d * d, 0);  // counted digit >= 1, parameters all 0
    std::vector<int> digits(k);
    for (int p = 0; p < Sp; ++p) {
        // decode the parameter symbol onto the non-counted tracks
        int rem = p;
        for (int i = k - 1, j = static_cast<int>(lr.param_sizes.size()) - 1; i >= 0; --i) {
            if (i == ci) continue;
            digits[i] = rem % lr.param_sizes[j];
            rem /= lr.param_sizes[j];
            --j;
        }
        for (int e = 0; e < D; ++e) {
            digits[ci] = e;
            int sym = m.pack(digits);
            for (size_t s = 0; s < d; ++s) {
                uint32_t t = m.next(static_cast<uint32_t>(s), sym);
                if (t == MultiTrackDfa::kDead) continue;
                ++lr.mu[p][s * d + t];
                if (p == 0 && e >= 1) ++pad[s * d + t];
            }
        }
    }

    lr.u.assign(d, BigInt(0));
    lr.v.assign(d, BigInt(0));
    lr.u[m.initial] = BigInt(1);
    for (size_t s = 0; s < d; ++s) lr.v[s] = BigInt(m.accepting[s] ? 1 : 0);

    // fold the counted variable's leading digits (parameters still padded)
    // into the initial vector; a live cycle here means the count diverges
    std::vector<BigInt> w(d, BigInt(0));
    for (size_t s = 0; s < d; ++s)
        for (size_t t = 0; t < d; ++t)
            if (pad[s * d + t]) w[t] += lr.u[s] * BigInt(pad[s * d + t]);
    std::vector<BigInt> u_ext = lr.u;
    const auto& m0 = lr.mu[0];
    for (size_t step = 0; step <= d; ++step) {
        bool zero = true;
        for (const auto& x : w)
            if (!x.is_zero()) { zero = false; break; }
        if (zero) break;
        if (step == d)
            throw DivergingCountError("count_representation: infinitely many counted values");
        for (size_t s = 0; s < d; ++s) u_ext[s] += w[s];
        std::vector<BigInt> nw(d, BigInt(0));
        for (size_t s = 0; s < d; ++s) {
            if (w[s].is_zero()) continue;
            for (size_t t = 0; t < d; ++t)
                if (m0[s * d + t]) nw[t] += w[s] * BigInt(m0[s * d + t]);
        }
        w = std::move(nw);
    }
    lr.u = std::move(u_ext);
    return lr;
}

LinearRepresentation FormulaCompiler::count_representation_text(std::string_view text,
                                                                const std::string& counted) {
    ParsedFormula p = parse_formula(text);
    check_system_tag(sys_, p.system_tag);
    return count_representation(*p.formula, counted);
}

// ---------------------------------------------------------------------------
// membership

bool FormulaCompiler::member(const Relation& rel,
                             const std::vector<unsigned long long>& values) const {
    if (values.size() != rel.vars.size())
        throw std::invalid_argument("member: arity mismatch");
    std::vector<std::string> tracks;
    for (unsigned long long v : values) tracks.push_back(sys_.represent(v));
    return accepts_tracks(rel.dfa, tracks);
}

}  // namespace rote
