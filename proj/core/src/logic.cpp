#include "rote/logic.hpp"

#include <cctype>
#include <sstream>

namespace rote {

std::unique_ptr<Term> Term::make_var(std::string name) {
    auto t = std::make_unique<Term>();
    t->kind = Kind::Var;
    t->var = std::move(name);
    return t;
}
std::unique_ptr<Term> Term::make_const(unsigned long long v) {
    auto t = std::make_unique<Term>();
    t->kind = Kind::Const;
    t->value = v;
    return t;
}
std::unique_ptr<Term> Term::make_add(std::unique_ptr<Term> a, std::unique_ptr<Term> b) {
    auto t = std::make_unique<Term>();
    t->kind = Kind::Add;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
}
std::unique_ptr<Term> Term::make_sub(std::unique_ptr<Term> a, std::unique_ptr<Term> b) {
    auto t = std::make_unique<Term>();
    t->kind = Kind::Sub;
    t->lhs = std::move(a);
    t->rhs = std::move(b);
    return t;
}
std::unique_ptr<Term> Term::make_mul(unsigned long long c, std::unique_ptr<Term> inner) {
    auto t = std::make_unique<Term>();
    t->kind = Kind::Mul;
    t->value = c;
    t->lhs = std::move(inner);
    return t;
}

namespace {

void term_vars(const Term& t, std::set<std::string>& out) {
    switch (t.kind) {
        case Term::Kind::Var: out.insert(t.var); break;
        case Term::Kind::Const: break;
        case Term::Kind::Mul: term_vars(*t.lhs, out); break;
        case Term::Kind::Add:
        case Term::Kind::Sub:
            term_vars(*t.lhs, out);
            term_vars(*t.rhs, out);
            break;
    }
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f.kind) {
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            std::vector<std::string> fresh;
            for (const auto& v : f.quantified)
                if (bound.insert(v).second) fresh.push_back(v);
            collect_free(*f.children[0], bound, out);
            for (const auto& v : fresh) bound.erase(v);
            return;
        }
        case Formula::Kind::Cmp:
        case Formula::Kind::SeqCmp: {
            std::set<std::string> vars;
            if (f.a) term_vars(*f.a, vars);
            if (f.b) term_vars(*f.b, vars);
            for (const auto& v : vars)
                if (!bound.count(v)) out.insert(v);
            return;
        }
        case Formula::Kind::Call: {
            std::set<std::string> vars;
            for (const auto& t : f.args) term_vars(*t, vars);
            for (const auto& v : vars)
                if (!bound.count(v)) out.insert(v);
            return;
        }
        default:
            for (const auto& c : f.children) collect_free(*c, bound, out);
            return;
    }
}

}  // namespace

std::set<std::string> Formula::free_variables() const {
    std::set<std::string> bound, out;
    collect_free(*this, bound, out);
    return out;
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Lexer {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool try_consume(std::string_view tok) {
        skip_ws();
        if (text.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view tok) {
        if (!try_consume(tok)) throw ParseError("expected '" + std::string(tok) + "'", pos);
    }
    bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
    std::string ident() {
        skip_ws();
        if (pos >= text.size() || !ident_start(text[pos])) throw ParseError("expected identifier", pos);
        size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        return std::string(text.substr(start, pos - start));
    }
    unsigned long long number() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected numeral", pos);
        unsigned long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return v;
    }
};

struct Parser {
    Lexer lex;

    std::unique_ptr<Formula> formula() { return iff(); }

    std::unique_ptr<Formula> iff() {
        auto l = implies();
        if (lex.try_consume("<=>")) {
            auto r = iff();
            auto f = std::make_unique<Formula>();
            f->kind = Formula::Kind::Iff;
            f->children.push_back(std::move(l));
            f->children.push_back(std::move(r));
            return f;
        }
        return l;
    }

    std::unique_ptr<Formula> implies() {
        auto l = disj();
        // "<=>" starts with '<'; make sure we are looking at "=>" alone
        lex.skip_ws();
        if (lex.text.substr(lex.pos, 2) == "=>") {
            lex.pos += 2;
            auto r = implies();
            auto f = std::make_unique<Formula>();
            f->kind = Formula::Kind::Implies;
            f->children.push_back(std::move(l));
            f->children.push_back(std::move(r));
            return f;
        }
        return l;
    }

    std::unique_ptr<Formula> disj() {
        auto l = conj();
        while (lex.try_consume("|")) {
            auto r = conj();
            auto f = std::make_unique<Formula>();
            f->kind = Formula::Kind::Or;
            f->children.push_back(std::move(l));
            f->children.push_back(std::move(r));
            l = std::move(f);
        }
        return l;
    }

    std::unique_ptr<Formula> conj() {
        auto l = unary();
        while (lex.try_consume("&")) {
            auto r = unary();
            auto f = std::make_unique<Formula>();
            f->kind = Formula::Kind::And;
            f->children.push_back(std::move(l));
            f->children.push_back(std::move(r));
            l = std::move(f);
        }
        return l;
    }

    std::unique_ptr<Formula> unary() {
        if (lex.try_consume("~")) {
            auto f = std::make_unique<Formula>();
            f->kind = Formula::Kind::Not;
            f->children.push_back(unary());
            return f;
        }
        // quantifier: 'A' or 'E' immediately followed by a variable list;
        // its scope extends maximally to the right
        lex.skip_ws();
        if (lex.pos < lex.text.size() && (lex.text[lex.pos] == 'A' || lex.text[lex.pos] == 'E')) {
            char q = lex.text[lex.pos];
            size_t save = lex.pos;
            ++lex.pos;
            bool fused = lex.pos < lex.text.size() && lex.ident_char(lex.text[lex.pos]);
            bool spaced = !fused && lex.pos < lex.text.size() &&
                          std::isspace(static_cast<unsigned char>(lex.text[lex.pos]));
            if (fused || spaced) {
                std::vector<std::string> vars;
                try {
                    vars.push_back(lex.ident());
                    while (lex.try_consume(",")) vars.push_back(lex.ident());
                } catch (const ParseError&) {
                    lex.pos = save;
                    vars.clear();
                }
                if (!vars.empty()) {
                    auto f = std::make_unique<Formula>();
                    f->kind = q == 'A' ? Formula::Kind::Forall : Formula::Kind::Exists;
                    f->quantified = std::move(vars);
                    f->children.push_back(formula());
                    return f;
                }
            }
            lex.pos = save;
        }
        return primary();
    }

    std::unique_ptr<Formula> primary() {
        lex.skip_ws();
        if (lex.peek() == '(') {
            // try a parenthesized formula; fall back to a term comparison
            size_t save = lex.pos;
            try {
                lex.expect("(");
                auto f = formula();
                lex.expect(")");
                return f;
            } catch (const ParseError&) {
                lex.pos = save;
            }
        }
        if (lex.peek() == '$') return call();
        return atom();
    }

    std::unique_ptr<Formula> call() {
        lex.expect("$");
        auto f = std::make_unique<Formula>();
        f->kind = Formula::Kind::Call;
        f->callee = lex.ident();
        lex.expect("(");
        if (!lex.try_consume(")")) {
            f->args.push_back(term());
            while (lex.try_consume(",")) f->args.push_back(term());
            lex.expect(")");
        }
        return f;
    }

    CmpKind relop() {
        lex.skip_ws();
        if (lex.text.substr(lex.pos, 3) == "<=>") throw ParseError("unexpected '<=>'", lex.pos);
        if (lex.try_consume("<=")) return CmpKind::Le;
        if (lex.try_consume(">=")) return CmpKind::Ge;
        if (lex.try_consume("!=")) return CmpKind::Ne;
        if (lex.try_consume("<")) return CmpKind::Lt;
        if (lex.try_consume(">")) return CmpKind::Gt;
        if (lex.try_consume("=")) return CmpKind::Eq;
        throw ParseError("expected comparison operator", lex.pos);
    }

    // sequence reference NAME[term], or nullopt if not one
    bool at_seq_ref() {
        lex.skip_ws();
        size_t p = lex.pos;
        if (p >= lex.text.size() || !lex.ident_start(lex.text[p])) return false;
        while (p < lex.text.size() && lex.ident_char(lex.text[p])) ++p;
        while (p < lex.text.size() && std::isspace(static_cast<unsigned char>(lex.text[p]))) ++p;
        return p < lex.text.size() && lex.text[p] == '[';
    }

    std::unique_ptr<Formula> atom() {
        if (at_seq_ref()) {
            auto f = std::make_unique<Formula>();
            f->kind = Formula::Kind::SeqCmp;
            f->seq_a = lex.ident();
            lex.expect("[");
            f->a = term();
            lex.expect("]");
            CmpKind op = relop();
            if (op != CmpKind::Eq && op != CmpKind::Ne)
                throw ParseError("sequence values compare with = or != only", lex.pos);
            f->cmp = op;
            if (at_seq_ref()) {
                f->seq_b = lex.ident();
                lex.expect("[");
                f->b = term();
                lex.expect("]");
            } else {
                f->letter = static_cast<int>(lex.number());
            }
            return f;
        }
        auto f = std::make_unique<Formula>();
        f->kind = Formula::Kind::Cmp;
        f->a = term();
        f->cmp = relop();
        if (at_seq_ref())
            throw ParseError("cannot compare a number with a sequence value", lex.pos);
        f->b = term();
        return f;
    }

    std::unique_ptr<Term> term() {
        auto l = term_factor();
        while (true) {
            if (lex.try_consume("+")) {
                l = Term::make_add(std::move(l), term_factor());
            } else {
                lex.skip_ws();
                // '-' but not '->'
                if (lex.pos < lex.text.size() && lex.text[lex.pos] == '-') {
                    ++lex.pos;
                    l = Term::make_sub(std::move(l), term_factor());
                } else {
                    break;
                }
            }
        }
        return l;
    }

    std::unique_ptr<Term> term_factor() {
        auto l = term_primary();
        while (lex.try_consume("*")) {
            auto r = term_primary();
            // exactly one side must be a literal constant
            if (l->kind == Term::Kind::Const && r->kind == Term::Kind::Const) {
                l = Term::make_const(l->value * r->value);
            } else if (l->kind == Term::Kind::Const) {
                l = Term::make_mul(l->value, std::move(r));
            } else if (r->kind == Term::Kind::Const) {
                l = Term::make_mul(r->value, std::move(l));
            } else {
                throw ParseError("multiplication needs a literal constant side", lex.pos);
            }
        }
        return l;
    }

    std::unique_ptr<Term> term_primary() {
        lex.skip_ws();
        if (lex.peek() == '(') {
            lex.expect("(");
            auto t = term();
            lex.expect(")");
            return t;
        }
        if (lex.pos < lex.text.size() && std::isdigit(static_cast<unsigned char>(lex.text[lex.pos])))
            return Term::make_const(lex.number());
        return Term::make_var(lex.ident());
    }
};

}  // namespace

ParsedFormula parse_formula(std::string_view text) {
    ParsedFormula out;
    Parser p{Lexer{text, 0}};
    p.lex.skip_ws();
    if (p.lex.peek() == '?') {
        ++p.lex.pos;
        out.system_tag = p.lex.ident();
    }
    out.formula = p.formula();
    if (!p.lex.eof()) throw ParseError("trailing input", p.lex.pos);
    return out;
}

// ---------------------------------------------------------------------------
// printing (tests and error messages)

std::string to_string(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Var: return t.var;
        case Term::Kind::Const: return std::to_string(t.value);
        case Term::Kind::Add: return "(" + to_string(*t.lhs) + "+" + to_string(*t.rhs) + ")";
        case Term::Kind::Sub: return "(" + to_string(*t.lhs) + "-" + to_string(*t.rhs) + ")";
        case Term::Kind::Mul: return std::to_string(t.value) + "*" + to_string(*t.lhs);
    }
    return "?";
}

namespace {
const char* cmp_text(CmpKind c) {
    switch (c) {
        case CmpKind::Eq: return "=";
        case CmpKind::Ne: return "!=";
        case CmpKind::Lt: return "<";
        case CmpKind::Le: return "<=";
        case CmpKind::Gt: return ">";
        case CmpKind::Ge: return ">=";
    }
    return "?";
}
}  // namespace

std::string to_string(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::And:
            return "(" + to_string(*f.children[0]) + " & " + to_string(*f.children[1]) + ")";
        case Formula::Kind::Or:
            return "(" + to_string(*f.children[0]) + " | " + to_string(*f.children[1]) + ")";
        case Formula::Kind::Implies:
            return "(" + to_string(*f.children[0]) + " => " + to_string(*f.children[1]) + ")";
        case Formula::Kind::Iff:
            return "(" + to_string(*f.children[0]) + " <=> " + to_string(*f.children[1]) + ")";
        case Formula::Kind::Not:
            return "~" + to_string(*f.children[0]);
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            std::string s = f.kind == Formula::Kind::Exists ? "E" : "A";
            for (size_t i = 0; i < f.quantified.size(); ++i)
                s += (i ? "," : "") + f.quantified[i];
            return "(" + s + " " + to_string(*f.children[0]) + ")";
        }
        case Formula::Kind::Cmp:
            return to_string(*f.a) + cmp_text(f.cmp) + to_string(*f.b);
        case Formula::Kind::SeqCmp: {
            std::string rhs = f.seq_b.empty() ? std::to_string(f.letter)
                                              : f.seq_b + "[" + to_string(*f.b) + "]";
            return f.seq_a + "[" + to_string(*f.a) + "]" + cmp_text(f.cmp) + rhs;
        }
        case Formula::Kind::Call: {
            std::string s = "$" + f.callee + "(";
            for (size_t i = 0; i < f.args.size(); ++i) s += (i ? "," : "") + to_string(*f.args[i]);
            return s + ")";
        }
    }
    return "?";
}

}  // namespace rote
