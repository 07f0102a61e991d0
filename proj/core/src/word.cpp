#include "rote/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace rote {

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word complemented01(const Word& w) {
    Word r = w;
    for (char& c : r) {
        if (c == '0') c = '1';
        else if (c == '1') c = '0';
        else throw std::domain_error("complemented01: non-binary symbol");
    }
    return r;
}

const Word& Morphism::image(char c) const {
    auto it = rules.find(c);
    if (it == rules.end())
        throw std::domain_error(std::string("morphism: symbol '") + c + "' outside source alphabet");
    return it->second;
}

Word Morphism::apply(const Word& w) const {
    Word r;
    for (char c : w) r += image(c);
    return r;
}

bool Morphism::prolongable_on(char seed) const {
    auto it = rules.find(seed);
    return it != rules.end() && it->second.size() >= 2 && it->second[0] == seed;
}

Word Morphism::fixed_point_prefix(char seed, size_t len) const {
    if (!prolongable_on(seed))
        throw std::invalid_argument("fixed_point_prefix: morphism not prolongable on seed");
    Word w(1, seed);
    while (w.size() < len) {
        Word next = apply(w);
        if (next.size() <= w.size())
            throw std::invalid_argument("fixed_point_prefix: fixed point does not grow");
        w = std::move(next);
    }
    w.resize(len);
    return w;
}

Morphism Morphism::parse(std::string_view text) {
    Morphism m;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto arrow = line.find("->");
        if (arrow == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw std::invalid_argument("morphism: bad rule line: " + line);
            continue;
        }
        std::string lhs = line.substr(0, arrow);
        std::string rhs = line.substr(arrow + 2);
        auto strip = [](std::string& s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
        };
        strip(lhs);
        strip(rhs);
        if (lhs.size() != 1)
            throw std::invalid_argument("morphism: left side must be one letter: " + line);
        if (m.rules.count(lhs[0]))
            throw std::invalid_argument("morphism: duplicate rule for " + lhs);
        m.rules[lhs[0]] = rhs;
    }
    if (m.rules.empty()) throw std::invalid_argument("morphism: no rules");
    return m;
}

std::string Morphism::to_text() const {
    std::string out;
    for (const auto& [c, img] : rules) {
        out += c;
        out += " -> ";
        out += img;
        out += '\n';
    }
    return out;
}

namespace {

const Morphism& morphism_h012() {
    static const Morphism m = Morphism::parse("0 -> 01\n1 -> 21\n2 -> 0");
    return m;
}
const Morphism& morphism_g012() {
    static const Morphism m = Morphism::parse("0 -> 011\n1 -> 0\n2 -> 01");
    return m;
}
}  // namespace

const Morphism& morphism_p_base() {
    static const Morphism m = Morphism::parse("a -> ab\nb -> cb\nc -> a");
    return m;
}
const Morphism& morphism_q_image() {
    static const Morphism m = Morphism::parse("a -> 011\nb -> 0\nc -> 01");
    return m;
}
const Morphism& morphism_q_marks() {
    static const Morphism m = Morphism::parse("a -> a12\nb -> b\nc -> c3");
    return m;
}
const Morphism& morphism_q_mark_out() {
    static const Morphism m =
        Morphism::parse("a -> 0\nb -> 0\nc -> 0\n1 -> 1\n2 -> 1\n3 -> 1");
    return m;
}

Word word_p(size_t len) { return len == 0 ? Word{} : morphism_h012().fixed_point_prefix('0', len); }
Word word_p_abc(size_t len) { return len == 0 ? Word{} : morphism_p_base().fixed_point_prefix('a', len); }

Word word_p_marked(size_t len) {
    // every base letter expands to at least one symbol, so a base prefix of
    // the same length suffices
    Word p = word_p_abc(len);
    Word m = morphism_q_marks().apply(p);
    if (m.size() < len) throw std::logic_error("word_p_marked: prefix too short");
    m.resize(len);
    return m;
}

Word word_q(size_t len) {
    Word p = word_p(len);
    Word q = morphism_g012().apply(p);
    if (q.size() < len) throw std::logic_error("word_q: prefix too short");
    q.resize(len);
    return q;
}

Word word_q_from_marks(size_t len) {
    Word m = word_p_marked(len);
    Word q = morphism_q_mark_out().apply(m);
    q.resize(len);
    return q;
}

ExponentStats exponent_stats(const Word& w) {
    if (w.empty()) throw std::domain_error("exponent_stats: empty word");
    size_t n = w.size();
    for (size_t p = 1; p < n; ++p) {
        bool ok = true;
        for (size_t i = 0; i + p < n; ++i)
            if (w[i] != w[i + p]) { ok = false; break; }
        if (ok) return {p, Rational(static_cast<long long>(n), static_cast<long long>(p))};
    }
    return {n, Rational(1)};
}

Rational critical_exponent(const Word& w) {
    if (w.empty()) throw std::domain_error("critical_exponent: empty word");
    size_t n = w.size();
    // max over periods p of (longest run with w[i]==w[i+p], plus p) / p;
    // every factor's exponent is realized at its shortest period
    unsigned long long best_num = 1, best_den = 1;
    for (size_t p = 1; p < n; ++p) {
        size_t run = 0, max_run = 0;
        for (size_t i = 0; i + p < n; ++i) {
            run = w[i] == w[i + p] ? run + 1 : 0;
            max_run = std::max(max_run, run);
        }
        unsigned long long len = max_run + p;
        if (len * best_den > best_num * p) {
            best_num = len;
            best_den = p;
        }
    }
    return Rational(static_cast<long long>(best_num), static_cast<long long>(best_den));
}

bool has_factor_with_exponent(const Word& w, const Rational& threshold, bool strict_greater) {
    if (w.empty()) return false;
    // every single letter is a factor of exponent exactly 1
    if (strict_greater ? threshold < Rational(1) : threshold <= Rational(1)) return true;
    long long tn = threshold.num().to_int64();
    long long td = threshold.den().to_int64();
    size_t n = w.size();
    for (size_t p = 1; p < n; ++p) {
        size_t run = 0;
        for (size_t i = 0; i + p < n; ++i) {
            run = w[i] == w[i + p] ? run + 1 : 0;
            long long len = static_cast<long long>(run + p);
            long long lhs = len * td;
            long long rhs = tn * static_cast<long long>(p);
            if (strict_greater ? lhs > rhs : lhs >= rhs) return true;
        }
    }
    return false;
}

namespace {

// distinct length-n factors as views, exact (sort + unique)
std::vector<std::string_view> distinct_factors(const Word& prefix, size_t n) {
    if (n > prefix.size()) throw std::out_of_range("factor length exceeds prefix");
    std::vector<std::string_view> v;
    v.reserve(prefix.size() - n + 1);
    for (size_t i = 0; i + n <= prefix.size(); ++i)
        v.emplace_back(prefix.data() + i, n);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

bool is_rote(const Word& w) {
    for (char c : w)
        if (c != '0' && c != '1') throw std::domain_error("is_rote: non-binary alphabet");
    for (size_t i = 1; i <= w.size(); ++i)
        if (distinct_factors(w, i).size() > 2 * i) return false;
    return true;
}

size_t factor_complexity(const Word& prefix, size_t n) {
    if (n == 0) return 1;
    return distinct_factors(prefix, n).size();
}

size_t abelian_complexity(const Word& prefix, size_t n) {
    if (n > prefix.size()) throw std::out_of_range("factor length exceeds prefix");
    if (n == 0) return 1;
    size_t zeros = 0;
    for (size_t i = 0; i < n; ++i) zeros += prefix[i] == '0';
    std::vector<char> seen(n + 1, 0);
    seen[zeros] = 1;
    size_t count = 1;
    for (size_t i = n; i < prefix.size(); ++i) {
        zeros += (prefix[i] == '0') ;
        zeros -= (prefix[i - n] == '0');
        if (!seen[zeros]) {
            seen[zeros] = 1;
            ++count;
        }
    }
    return count;
}

std::set<Word> reversible_factors(const Word& prefix, size_t n) {
    auto factors = distinct_factors(prefix, n);
    std::set<Word> result;
    for (auto f : factors) {
        Word r(f.rbegin(), f.rend());
        if (std::binary_search(factors.begin(), factors.end(), std::string_view(r)))
            result.insert(Word(f));
    }
    return result;
}

RecurrenceGaps max_recurrence_gap(const Word& prefix, size_t n) {
    if (n == 0 || n > prefix.size()) throw std::out_of_range("bad factor length");
    std::vector<uint32_t> idx(prefix.size() - n + 1);
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<uint32_t>(i);
    auto view = [&](uint32_t i) { return std::string_view(prefix.data() + i, n); };
    std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
        auto va = view(a), vb = view(b);
        return va != vb ? va < vb : a < b;
    });
    RecurrenceGaps out;
    size_t i = 0;
    while (i < idx.size()) {
        size_t j = i + 1;
        while (j < idx.size() && view(idx[j]) == view(idx[i])) ++j;
        if (j - i == 1) {
            ++out.single_occurrence_count;
        } else {
            for (size_t k = i + 1; k < j; ++k)
                out.max_gap = std::max<size_t>(out.max_gap, idx[k] - idx[k - 1]);
        }
        i = j;
    }
    return out;
}

HalfIntegerPowers exponent_five_halves_powers(const Word& prefix) {
    HalfIntegerPowers out;
    size_t L = prefix.size();
    for (size_t p = 2; 5 * p <= 2 * L; p += 2) {
        size_t n = 5 * p / 2;
        // window [i, i+n) has period p iff positions i..i+n-p-1 all match at
        // distance p
        size_t need = n - p;
        size_t run = 0;
        for (size_t t = 0; t + p < L; ++t) {
            run = prefix[t] == prefix[t + p] ? run + 1 : 0;
            if (run >= need && t + p + 1 >= n) {
                size_t i = t + p + 1 - n;
                out.occurrences.emplace_back(i, n);
                out.factors.insert(prefix.substr(i, n));
            }
        }
    }
    return out;
}

}  // namespace rote
