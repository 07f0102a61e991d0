#include "rote/numeration.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rote {

namespace {

using I128 = __int128;

long long checked_ll(I128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
    return static_cast<long long>(v);
}

struct VecKeyHash {
    size_t operator()(const std::vector<long long>& v) const {
        uint64_t h = 1469598103934665603ull;
        for (long long x : v) {
            h ^= static_cast<uint64_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

// polynomial helpers on integer coefficient vectors (index = power)
std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Rational poly_eval(const std::vector<long long>& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + Rational(p[i]);
    return acc;
}

}  // namespace

IncidenceMatrix incidence_matrix(const Morphism& m) {
    IncidenceMatrix out;
    for (const auto& [c, img] : m.rules) {
        out.letters.push_back(c);
        (void)img;
    }
    size_t k = out.letters.size();
    out.counts.assign(k, std::vector<long long>(k, 0));
    auto index = [&](char c) {
        auto it = std::find(out.letters.begin(), out.letters.end(), c);
        if (it == out.letters.end()) throw std::domain_error("incidence: image symbol outside alphabet");
        return static_cast<size_t>(it - out.letters.begin());
    };
    for (size_t x = 0; x < k; ++x)
        for (char y : m.image(out.letters[x])) ++out.counts[x][index(y)];
    return out;
}

Recurrence char_recurrence(const IncidenceMatrix& m) {
    size_t k = m.letters.size();
    // det(X I - M) by permutation expansion; alphabets here are tiny
    std::vector<size_t> perm(k);
    for (size_t i = 0; i < k; ++i) perm[i] = i;
    std::vector<long long> det(k + 1, 0);
    do {
        int sign = 1;
        {
            auto p = perm;
            for (size_t i = 0; i < k; ++i)
                while (p[i] != i) {
                    std::swap(p[i], p[p[i]]);
                    sign = -sign;
                }
        }
        std::vector<long long> term{static_cast<long long>(sign)};
        for (size_t i = 0; i < k; ++i) {
            std::vector<long long> entry;  // (X I - M)[i][perm[i]]
            if (i == perm[i]) entry = {-m.counts[i][perm[i]], 1};
            else entry = {-m.counts[i][perm[i]]};
            term = poly_mul(term, entry);
        }
        det.resize(std::max(det.size(), term.size()), 0);
        for (size_t i = 0; i < term.size(); ++i) det[i] += term[i];
    } while (std::next_permutation(perm.begin(), perm.end()));
    det.resize(k + 1);
    if (det[k] != 1) throw std::logic_error("char_recurrence: polynomial not monic");

    Recurrence rec;
    rec.char_poly = det;
    rec.coeffs.resize(k);
    for (size_t j = 1; j <= k; ++j) rec.coeffs[j - 1] = -det[k - j];

    // dominant-root enclosure by exact bisection; valid for the Pisot-style
    // polynomials used here (strip powers of X first)
    std::vector<long long> p = det;
    size_t strip = 0;
    while (strip < p.size() && p[strip] == 0) ++strip;
    p.erase(p.begin(), p.begin() + strip);
    Rational lo(1), hi(2);
    if (poly_eval(p, lo) < Rational(0)) {
        while (poly_eval(p, hi) <= Rational(0)) hi = hi * Rational(2);
        for (int i = 0; i < 80; ++i) {
            Rational mid = (lo + hi) / Rational(2);
            if (poly_eval(p, mid) < Rational(0)) lo = mid;
            else hi = mid;
        }
    }
    rec.root_low = lo;
    rec.root_high = hi;
    return rec;
}

// ---------------------------------------------------------------------------
// NumerationSystem core

long long NumerationSystem::seq_value(int state, int digit, size_t k) const {
    const auto& init = seq0.at(state).at(digit);
    if (init.empty()) throw std::invalid_argument("seq_value: no such transition");
    size_t r = rec.order();
    if (k < r) return init[k];
    std::vector<I128> window(init.begin(), init.end());
    for (size_t i = r; i <= k; ++i) {
        I128 v = 0;
        for (size_t j = 1; j <= r; ++j) v += static_cast<I128>(rec.coeffs[j - 1]) * window[r - j];
        for (size_t j = 0; j + 1 < r; ++j) window[j] = window[j + 1];
        window[r - 1] = v;
        checked_ll(v, "seq_value: overflow");
    }
    return static_cast<long long>(window[r - 1]);
}

long long NumerationSystem::evaluate(std::string_view digits) const {
    if (digits.empty()) return 0;
    if (digits[0] == '0')
        throw std::invalid_argument("evaluate: leading zero is not a canonical representation");
    I128 total = 0;
    int s = initial;
    for (size_t i = 0; i < digits.size(); ++i) {
        int d = digits[i] - '0';
        if (d < 0 || d >= digit_count) throw std::invalid_argument("evaluate: digit outside alphabet");
        if (next_state[s][d] < 0) throw std::invalid_argument("evaluate: not a path of the addressing automaton");
        size_t exponent = digits.size() - 1 - i;
        total += seq_value(s, d, exponent);
        s = next_state[s][d];
    }
    return checked_ll(total, "evaluate: overflow");
}

namespace {

// rows of path counts: row m holds the number of length-m paths from each state
struct PathCounts {
    const NumerationSystem& sys;
    std::vector<std::vector<unsigned long long>> rows;

    explicit PathCounts(const NumerationSystem& s) : sys(s) {
        rows.emplace_back(sys.num_states(), 1);
    }
    const std::vector<unsigned long long>& row(size_t m) {
        while (rows.size() <= m) {
            const auto& prev = rows.back();
            std::vector<unsigned long long> cur(sys.num_states(), 0);
            for (size_t s = 0; s < sys.num_states(); ++s)
                for (int d = 0; d < sys.digit_count; ++d) {
                    int u = sys.next_state[s][d];
                    if (u < 0) continue;
                    if (__builtin_add_overflow(cur[s], prev[u], &cur[s]))
                        throw std::overflow_error("path_counts: overflow");
                }
            rows.push_back(std::move(cur));
        }
        return rows[m];
    }
    // canonical representations of exactly this length
    unsigned long long reps_of_length(size_t len) {
        if (len == 0) return 1;
        const auto& r = row(len - 1);
        unsigned long long acc = 0;
        for (int d = 1; d < sys.digit_count; ++d) {
            int u = sys.next_state[sys.initial][d];
            if (u < 0) continue;
            if (__builtin_add_overflow(acc, r[u], &acc))
                throw std::overflow_error("path_counts: overflow");
        }
        return acc;
    }
};

}  // namespace

unsigned long long NumerationSystem::count_of_length(size_t len) const {
    PathCounts t(*this);
    return t.reps_of_length(len);
}

std::string NumerationSystem::represent(unsigned long long n) const {
    if (n == 0) return "";
    // locate the length block in radix order, then unrank within it
    PathCounts t(*this);
    size_t len = 1;
    unsigned long long before = 1;  // representations shorter than len
    while (true) {
        unsigned long long block = t.reps_of_length(len);
        if (n < before + block) break;
        before += block;
        ++len;
        if (len > 200) throw std::overflow_error("represent: length runaway");
    }
    unsigned long long r = n - before;
    std::string out;
    int s = initial;
    for (size_t m = len; m-- > 0;) {
        int dmin = out.empty() ? 1 : 0;
        bool placed = false;
        for (int d = dmin; d < digit_count; ++d) {
            int u = next_state[s][d];
            if (u < 0) continue;
            unsigned long long c = t.row(m)[u];
            if (r < c) {
                out.push_back(static_cast<char>('0' + d));
                s = u;
                placed = true;
                break;
            }
            r -= c;
        }
        if (!placed) throw std::logic_error("represent: unranking failed");
    }
    return out;
}

MultiTrackDfa NumerationSystem::addressing_dfa() const {
    MultiTrackDfa a;
    a.track_sizes = {digit_count};
    a.initial = static_cast<uint32_t>(initial);
    a.accepting.assign(num_states(), 1);
    a.delta.assign(num_states() * static_cast<size_t>(digit_count), MultiTrackDfa::kDead);
    for (size_t s = 0; s < num_states(); ++s)
        for (int d = 0; d < digit_count; ++d)
            if (next_state[s][d] >= 0)
                a.delta[s * digit_count + d] = static_cast<uint32_t>(next_state[s][d]);
    return a;
}

Dfao NumerationSystem::word_dfao() const {
    Dfao d;
    d.shell = addressing_dfa();
    d.outputs = outputs;
    return d;
}

MultiTrackDfa NumerationSystem::constant_dfa(unsigned long long c) const {
    std::string rep = represent(c);
    MultiTrackDfa a;
    a.track_sizes = {digit_count};
    size_t n = rep.size() + 1;
    a.initial = 0;
    a.accepting.assign(n, 0);
    a.accepting[n - 1] = 1;
    a.delta.assign(n * static_cast<size_t>(digit_count), MultiTrackDfa::kDead);
    a.delta[0] = 0;  // leading-padding loop on digit 0
    for (size_t i = 0; i < rep.size(); ++i) {
        int d = rep[i] - '0';
        a.delta[i * digit_count + d] = static_cast<uint32_t>(i + 1);
    }
    if (!rep.empty() && rep[0] - '0' == 0) throw std::logic_error("constant_dfa: bad representation");
    return minimize(a);
}

MultiTrackDfa NumerationSystem::compare_dfa(CmpKind op) const {
    // lexicographic comparison of equal-length padded strings is value order
    // because representations are radix-ordered and leading digits are 0
    MultiTrackDfa addr = addressing_dfa();
    const uint32_t n = static_cast<uint32_t>(num_states());
    const int D = digit_count;
    MultiTrackDfa a;
    a.track_sizes = {D, D};
    const int S = D * D;
    auto id = [&](uint32_t sx, uint32_t sy, uint32_t ord) { return (ord * n + sx) * n + sy; };
    size_t m = static_cast<size_t>(n) * n * 3;
    a.initial = id(static_cast<uint32_t>(initial), static_cast<uint32_t>(initial), 0);
    a.accepting.assign(m, 0);
    a.delta.assign(m * S, MultiTrackDfa::kDead);
    for (uint32_t sx = 0; sx < n; ++sx)
        for (uint32_t sy = 0; sy < n; ++sy)
            for (uint32_t ord = 0; ord < 3; ++ord) {  // 0 eq, 1 lt, 2 gt
                bool acc = false;
                switch (op) {
                    case CmpKind::Eq: acc = ord == 0; break;
                    case CmpKind::Ne: acc = ord != 0; break;
                    case CmpKind::Lt: acc = ord == 1; break;
                    case CmpKind::Le: acc = ord != 2; break;
                    case CmpKind::Gt: acc = ord == 2; break;
                    case CmpKind::Ge: acc = ord != 1; break;
                }
                uint32_t from = id(sx, sy, ord);
                a.accepting[from] = acc;
                for (int dx = 0; dx < D; ++dx)
                    for (int dy = 0; dy < D; ++dy) {
                        uint32_t tx = addr.next(sx, dx), ty = addr.next(sy, dy);
                        if (tx == MultiTrackDfa::kDead || ty == MultiTrackDfa::kDead) continue;
                        uint32_t nord = ord != 0 ? ord : (dx < dy ? 1 : (dx > dy ? 2 : 0));
                        a.delta[static_cast<size_t>(from) * S + dx * D + dy] = id(tx, ty, nord);
                    }
            }
    return minimize(a);
}

// ---------------------------------------------------------------------------
// carry-vector synthesis of linear relations

MultiTrackDfa NumerationSystem::linear_eq_dfa(std::span<const long long> coeffs,
                                              const SynthesisOptions& opts) const {
    const size_t k = coeffs.size();
    const size_t r = rec.order();
    const int D = digit_count;

    // companion step for the shared recurrence
    auto step = [&](const std::vector<I128>& v) {
        std::vector<I128> w(r);
        for (size_t j = 0; j + 1 < r; ++j) w[j] = v[j + 1];
        I128 top = 0;
        for (size_t j = 1; j <= r; ++j) top += static_cast<I128>(rec.coeffs[j - 1]) * v[r - j];
        w[r - 1] = top;
        return w;
    };

    // tail bound: with m digits left, future columns can move the value by at
    // most tail[m]; the enclosure of the dominant root guarantees this grows
    // like the dominant power, so a carry dead for the whole horizon is dead
    // for good (verified independently by the brute-force box and the
    // algebraic-law checks)
    long long csum = 0;
    for (long long c : coeffs) csum += c < 0 ? -c : c;
    std::vector<I128> tail(static_cast<size_t>(opts.horizon) + 1, 0);
    {
        std::vector<I128> maxseq(static_cast<size_t>(opts.horizon) + 1, 0);
        for (size_t s = 0; s < num_states(); ++s)
            for (int d = 0; d < D; ++d) {
                if (next_state[s][d] < 0) continue;
                std::vector<I128> w(seq0[s][d].begin(), seq0[s][d].end());
                for (int e = 0; e <= opts.horizon; ++e) {
                    maxseq[e] = std::max(maxseq[e], w[0]);
                    w = step(w);
                }
            }
        for (int m = 1; m <= opts.horizon; ++m) tail[m] = tail[m - 1] + csum * maxseq[m - 1];
    }

    auto useful = [&](const std::vector<I128>& carry) {
        std::vector<I128> v = carry;
        for (int m = 0; m <= opts.horizon; ++m) {
            I128 x = v[0] < 0 ? -v[0] : v[0];
            if (x <= tail[m]) return true;
            v = step(v);
        }
        return false;
    };

    MultiTrackDfa out;
    out.track_sizes.assign(k, D);
    const int S = out.num_symbols();

    // state = per-track addressing states followed by the carry window
    std::unordered_map<std::vector<long long>, uint32_t, VecKeyHash> ids;
    std::vector<std::vector<long long>> states;
    auto intern = [&](std::vector<long long> st) -> uint32_t {
        auto [it, inserted] = ids.try_emplace(std::move(st), static_cast<uint32_t>(states.size()));
        if (inserted) states.push_back(it->first);
        return it->second;
    };

    std::vector<long long> init(k + r, 0);
    for (size_t i = 0; i < k; ++i) init[i] = initial;
    out.initial = intern(std::move(init));

    std::vector<int> digits(k);
    for (size_t qi = 0; qi < states.size(); ++qi) {
        if (states.size() > opts.state_cap)
            throw SynthesisError("linear_eq_dfa: carry exploration exceeded the state cap");
        out.delta.resize((qi + 1) * static_cast<size_t>(S), MultiTrackDfa::kDead);
        std::vector<long long> st = states[qi];
        for (int sym = 0; sym < S; ++sym) {
            out.unpack(sym, digits);
            std::vector<long long> nxt(k + r);
            bool ok = true;
            for (size_t i = 0; i < k && ok; ++i) {
                int u = next_state[st[i]][digits[i]];
                if (u < 0) ok = false;
                nxt[i] = u;
            }
            if (!ok) continue;
            std::vector<I128> carry(r);
            for (size_t j = 0; j < r; ++j) carry[j] = st[k + j];
            carry = step(carry);
            for (size_t i = 0; i < k; ++i) {
                const auto& s0 = seq0[st[i]][digits[i]];
                for (size_t j = 0; j < r; ++j) carry[j] += static_cast<I128>(coeffs[i]) * s0[j];
            }
            bool fits = true;
            for (size_t j = 0; j < r; ++j)
                if (carry[j] > INT64_MAX / 4 || carry[j] < INT64_MIN / 4) fits = false;
            if (!fits || !useful(carry)) continue;
            for (size_t j = 0; j < r; ++j) nxt[k + j] = static_cast<long long>(carry[j]);
            out.delta[qi * S + sym] = intern(std::move(nxt));
        }
    }
    out.accepting.assign(states.size(), 0);
    for (size_t i = 0; i < states.size(); ++i) out.accepting[i] = states[i][k] == 0;
    return minimize(out);
}

MultiTrackDfa NumerationSystem::addition_dfa(const SynthesisOptions& opts) const {
    const long long coeffs[3] = {1, 1, -1};
    return linear_eq_dfa(coeffs, opts);
}

// ---------------------------------------------------------------------------
// construction from morphisms

namespace {

// |m^k(y)| tables for k < depth
std::vector<std::vector<long long>> iterate_lengths(const Morphism& m,
                                                    const std::vector<char>& letters,
                                                    const std::vector<long long>& weight,
                                                    size_t depth) {
    size_t k = letters.size();
    auto index = [&](char c) {
        for (size_t i = 0; i < k; ++i)
            if (letters[i] == c) return i;
        throw std::domain_error("iterate_lengths: symbol outside alphabet");
    };
    std::vector<std::vector<long long>> len(depth, std::vector<long long>(k, 0));
    len[0] = weight;
    for (size_t d = 1; d < depth; ++d)
        for (size_t i = 0; i < k; ++i) {
            I128 acc = 0;
            for (char y : m.image(letters[i])) acc += len[d - 1][index(y)];
            len[d][i] = checked_ll(acc, "iterate_lengths: overflow");
        }
    return len;
}

}  // namespace

NumerationSystem dt_from_morphism(const Morphism& m, char seed, std::string name) {
    if (!m.prolongable_on(seed))
        throw std::invalid_argument("dt_from_morphism: morphism not prolongable on seed");

    NumerationSystem sys;
    sys.name = std::move(name);
    sys.base = m;
    sys.seed = seed;

    IncidenceMatrix inc = incidence_matrix(m);
    sys.rec = char_recurrence(inc);
    const size_t r = sys.rec.order();
    const auto& letters = inc.letters;
    auto index = [&](char c) {
        return static_cast<int>(std::find(letters.begin(), letters.end(), c) - letters.begin());
    };
    sys.initial = index(seed);

    size_t max_img = 0;
    for (const auto& [c, img] : m.rules) max_img = std::max(max_img, img.size());
    sys.digit_count = static_cast<int>(max_img);

    auto len = iterate_lengths(m, letters, std::vector<long long>(letters.size(), 1), r);

    sys.state_names.reserve(letters.size());
    for (char c : letters) sys.state_names.emplace_back(1, c);
    sys.next_state.assign(letters.size(), std::vector<int>(sys.digit_count, -1));
    sys.seq0.assign(letters.size(), std::vector<std::vector<long long>>(sys.digit_count));
    for (size_t x = 0; x < letters.size(); ++x) {
        const Word& img = m.image(letters[x]);
        for (size_t d = 0; d < img.size(); ++d) {
            sys.next_state[x][d] = index(img[d]);
            std::vector<long long> vals(r, 0);
            for (size_t kk = 0; kk < r; ++kk) {
                I128 acc = 0;
                for (size_t p = 0; p < d; ++p) acc += len[kk][index(img[p])];
                vals[kk] = checked_ll(acc, "dt_from_morphism: overflow");
            }
            sys.seq0[x][d] = std::move(vals);
        }
    }
    sys.outputs.resize(letters.size());
    for (size_t x = 0; x < letters.size(); ++x) sys.outputs[x] = static_cast<int>(x);
    return sys;
}

NumerationSystem inflate_for_image(const NumerationSystem& base_sys, const Morphism& image,
                                   const Morphism& marks, const Morphism& mark_out,
                                   std::string name) {
    const Morphism& h = base_sys.base;
    IncidenceMatrix inc = incidence_matrix(h);
    const auto& letters = inc.letters;
    auto index = [&](char c) {
        return static_cast<int>(std::find(letters.begin(), letters.end(), c) - letters.begin());
    };

    size_t max_inc = 0;
    for (char c : letters) {
        const Word& mk = marks.image(c);
        if (mk.empty() || mk[0] != c)
            throw std::invalid_argument("inflate_for_image: marks must start with the letter itself");
        max_inc = std::max(max_inc, mk.size() - 1);
    }
    if (max_inc == 0) throw std::invalid_argument("inflate_for_image: nothing to inflate");

    // all inserted marks must share one output so a single absorbing state
    // can represent them
    std::optional<int> sink_out;
    for (char c : letters)
        for (char mk : marks.image(c).substr(1)) {
            const Word& o = mark_out.image(mk);
            if (o.size() != 1) throw std::invalid_argument("inflate_for_image: outputs must be single symbols");
            int v = o[0] - '0';
            if (sink_out && *sink_out != v)
                throw std::invalid_argument("inflate_for_image: inserted marks need one shared output");
            sink_out = v;
        }

    NumerationSystem sys;
    sys.name = std::move(name);
    sys.base = h;
    sys.seed = base_sys.seed;
    sys.image = image;
    sys.marks = marks;
    sys.mark_out = mark_out;
    sys.initial = base_sys.initial;

    // recurrence gains a factor of X: same coefficients plus a zero
    sys.rec.coeffs = base_sys.rec.coeffs;
    sys.rec.coeffs.push_back(0);
    sys.rec.char_poly.assign(1, 0);
    sys.rec.char_poly.insert(sys.rec.char_poly.end(), base_sys.rec.char_poly.begin(),
                             base_sys.rec.char_poly.end());
    sys.rec.root_low = base_sys.rec.root_low;
    sys.rec.root_high = base_sys.rec.root_high;
    const size_t r = sys.rec.order();

    auto relabel = [&](int d) { return d == 0 ? 0 : d + static_cast<int>(max_inc); };
    int max_digit = 0;
    for (size_t x = 0; x < letters.size(); ++x) {
        const Word& img = h.image(letters[x]);
        for (size_t d = 0; d < img.size(); ++d) {
            max_digit = std::max(max_digit, relabel(static_cast<int>(d)));
            size_t extras = marks.image(img[d]).size() - 1;
            if (extras) max_digit = std::max(max_digit, relabel(static_cast<int>(d)) + static_cast<int>(extras));
        }
    }
    sys.digit_count = max_digit + 1;

    size_t sink = letters.size();
    sys.state_names.reserve(sink + 1);
    for (char c : letters) sys.state_names.emplace_back(1, c);
    sys.state_names.emplace_back("mark");
    sys.next_state.assign(sink + 1, std::vector<int>(sys.digit_count, -1));
    sys.seq0.assign(sink + 1, std::vector<std::vector<long long>>(sys.digit_count));

    std::vector<long long> image_len(letters.size());
    for (size_t i = 0; i < letters.size(); ++i)
        image_len[i] = static_cast<long long>(image.image(letters[i]).size());
    auto len = iterate_lengths(h, letters, image_len, r);

    for (size_t x = 0; x < letters.size(); ++x) {
        const Word& img = h.image(letters[x]);
        for (size_t d = 0; d < img.size(); ++d) {
            int nd = relabel(static_cast<int>(d));
            if (sys.next_state[x][nd] != -1) throw std::logic_error("inflate_for_image: digit collision");
            sys.next_state[x][nd] = index(img[d]);
            std::vector<long long> vals(r, 0);
            for (size_t kk = 0; kk < r; ++kk) {
                I128 acc = 0;
                for (size_t p = 0; p < d; ++p) acc += len[kk][index(img[p])];
                vals[kk] = checked_ll(acc, "inflate_for_image: overflow");
            }
            sys.seq0[x][nd] = std::move(vals);

            size_t extras = marks.image(img[d]).size() - 1;
            for (size_t i = 1; i <= extras; ++i) {
                int di = nd + static_cast<int>(i);
                if (sys.next_state[x][di] != -1)
                    throw std::logic_error("inflate_for_image: digit collision");
                sys.next_state[x][di] = static_cast<int>(sink);
                std::vector<long long> alpha(r, 0);
                alpha[0] = static_cast<long long>(i);
                sys.seq0[x][di] = std::move(alpha);
            }
        }
    }

    sys.outputs.assign(sink + 1, 0);
    for (size_t x = 0; x < letters.size(); ++x) {
        const Word& o = mark_out.image(letters[x]);
        if (o.size() != 1) throw std::invalid_argument("inflate_for_image: outputs must be single symbols");
        sys.outputs[x] = o[0] - '0';
    }
    sys.outputs[sink] = *sink_out;
    return sys;
}

const NumerationSystem& dt_h() {
    static const NumerationSystem sys = dt_from_morphism(morphism_p_base(), 'a', "dt_h");
    return sys;
}

const NumerationSystem& dt_q() {
    static const NumerationSystem sys = inflate_for_image(
        dt_h(), morphism_q_image(), morphism_q_marks(), morphism_q_mark_out(), "dt_q");
    return sys;
}

// ---------------------------------------------------------------------------
// io

NumerationSystem system_from_text(std::string_view text, std::string name) {
    std::string base_rules, image_rules, marks_rules, out_rules;
    char seed = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        std::string rest;
        std::getline(ls, rest);
        if (head == "base") base_rules += rest + "\n";
        else if (head == "image") image_rules += rest + "\n";
        else if (head == "marks") marks_rules += rest + "\n";
        else if (head == "out") out_rules += rest + "\n";
        else if (head == "seed") {
            std::string s;
            std::istringstream(rest) >> s;
            if (s.size() != 1) throw std::invalid_argument("system: seed must be one letter");
            seed = s[0];
        } else {
            throw std::invalid_argument("system: unknown line: " + line);
        }
    }
    Morphism base = Morphism::parse(base_rules);
    if (!seed) seed = base.rules.begin()->first;
    NumerationSystem sys = dt_from_morphism(base, seed, name);
    if (!image_rules.empty()) {
        sys = inflate_for_image(sys, Morphism::parse(image_rules), Morphism::parse(marks_rules),
                                Morphism::parse(out_rules), name);
    }
    return sys;
}

std::string system_to_text(const NumerationSystem& sys) {
    std::ostringstream out;
    for (const auto& [c, img] : sys.base.rules) out << "base " << c << " -> " << img << "\n";
    out << "seed " << sys.seed << "\n";
    if (sys.image)
        for (const auto& [c, img] : sys.image->rules) out << "image " << c << " -> " << img << "\n";
    if (sys.marks)
        for (const auto& [c, img] : sys.marks->rules) out << "marks " << c << " -> " << img << "\n";
    if (sys.mark_out)
        for (const auto& [c, img] : sys.mark_out->rules) out << "out " << c << " -> " << img << "\n";
    return out.str();
}

std::vector<std::string> radix_language(const NumerationSystem& sys, size_t count) {
    std::vector<std::string> out{""};
    std::vector<std::pair<int, std::string>> layer{{sys.initial, ""}};
    while (out.size() < count) {
        std::vector<std::pair<int, std::string>> next;
        for (const auto& [state, word] : layer)
            for (int d = word.empty() ? 1 : 0; d < sys.digit_count; ++d) {
                int u = sys.next_state[state][d];
                if (u < 0) continue;
                next.emplace_back(u, word + static_cast<char>('0' + d));
            }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        for (const auto& [state, word] : next) {
            out.push_back(word);
            if (out.size() >= count) break;
        }
        layer = std::move(next);
        if (layer.empty()) break;
    }
    return out;
}

std::string sequence_automaton_to_text(const NumerationSystem& sys) {
    std::ostringstream out;
    out << dfa_to_text(sys.addressing_dfa());
    for (size_t s = 0; s < sys.num_states(); ++s)
        for (int d = 0; d < sys.digit_count; ++d) {
            if (sys.next_state[s][d] < 0) continue;
            out << "seq " << s << ' ' << d;
            for (long long v : sys.seq0[s][d]) out << ' ' << v;
            out << "\n";
        }
    out << "recurrence";
    for (long long c : sys.rec.coeffs) out << ' ' << c;
    out << "\n";
    return out.str();
}

}  // namespace rote
