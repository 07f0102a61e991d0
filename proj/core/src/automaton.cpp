#include "rote/automaton.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rote {

namespace {

constexpr size_t kMaxDeltaEntries = 300'000'000;

void check_size(size_t states, size_t symbols) {
    if (states * symbols > kMaxDeltaEntries)
        throw std::runtime_error("automaton too large: " + std::to_string(states) + " states x " +
                                 std::to_string(symbols) + " symbols");
}

struct VectorKeyHash {
    size_t operator()(const std::vector<uint32_t>& v) const {
        uint64_t h = 1469598103934665603ull;
        for (uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

struct BitsetKeyHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace

int MultiTrackDfa::num_symbols() const {
    long long s = 1;
    for (int t : track_sizes) {
        s *= t;
        if (s <= 0 || s > (1 << 24)) throw std::runtime_error("symbol alphabet too large");
    }
    return static_cast<int>(s);
}

int MultiTrackDfa::pack(std::span<const int> digits) const {
    int sym = 0;
    for (size_t i = 0; i < track_sizes.size(); ++i) sym = sym * track_sizes[i] + digits[i];
    return sym;
}

void MultiTrackDfa::unpack(int symbol, std::span<int> digits) const {
    for (size_t i = track_sizes.size(); i-- > 0;) {
        digits[i] = symbol % track_sizes[i];
        symbol /= track_sizes[i];
    }
}

bool MultiTrackDfa::run_symbols(std::span<const int> symbols) const {
    uint32_t s = initial;
    for (int sym : symbols) {
        s = next(s, sym);
        if (s == kDead) return false;
    }
    return accepting[s];
}

// ---------------------------------------------------------------------------
// minimize

MultiTrackDfa minimize(const MultiTrackDfa& a) {
    const int S = a.num_symbols();
    const uint32_t n = static_cast<uint32_t>(a.num_states());
    const uint32_t dead = n;  // virtual complete-automaton dead state

    auto target = [&](uint32_t s, int sym) -> uint32_t {
        if (s == dead) return dead;
        uint32_t t = a.next(s, sym);
        return t == MultiTrackDfa::kDead ? dead : t;
    };

    // group symbols acting identically to cut refinement work
    std::vector<int> class_rep;
    {
        std::unordered_map<uint64_t, std::vector<int>> by_hash;
        for (int sym = 0; sym < S; ++sym) {
            uint64_t h = 1469598103934665603ull;
            for (uint32_t s = 0; s < n; ++s) {
                h ^= target(s, sym);
                h *= 1099511628211ull;
            }
            auto& cand = by_hash[h];
            bool found = false;
            for (int rep : cand) {
                bool same = true;
                for (uint32_t s = 0; s < n && same; ++s)
                    if (target(s, rep) != target(s, sym)) same = false;
                if (same) { found = true; break; }
            }
            if (!found) {
                cand.push_back(sym);
                class_rep.push_back(sym);
            }
        }
    }

    std::vector<uint32_t> block(n + 1);
    uint32_t num_blocks = 1;
    for (uint32_t s = 0; s < n; ++s) {
        block[s] = a.accepting[s] ? 1 : 0;
        if (block[s]) num_blocks = 2;
    }
    block[dead] = 0;

    bool changed = true;
    std::vector<uint32_t> next_block(n + 1);
    while (changed) {
        changed = false;
        for (int rep : class_rep) {
            std::unordered_map<uint64_t, uint32_t> ids;
            ids.reserve(num_blocks * 2);
            uint32_t fresh = 0;
            for (uint32_t s = 0; s <= n; ++s) {
                uint64_t key = (static_cast<uint64_t>(block[s]) << 32) | block[target(s, rep)];
                auto [it, inserted] = ids.try_emplace(key, fresh);
                if (inserted) ++fresh;
                next_block[s] = it->second;
            }
            if (fresh != num_blocks) {
                block.swap(next_block);
                num_blocks = fresh;
                changed = true;
            }
        }
    }

    // canonical breadth-first renumbering over the full symbol order
    const uint32_t dead_block = block[dead];
    std::vector<uint32_t> rep_state(num_blocks, MultiTrackDfa::kDead);
    for (uint32_t s = 0; s < n; ++s)
        if (rep_state[block[s]] == MultiTrackDfa::kDead) rep_state[block[s]] = s;

    MultiTrackDfa out;
    out.track_sizes = a.track_sizes;
    if (block[a.initial] == dead_block) {
        out.initial = 0;
        out.accepting.assign(1, 0);
        out.delta.assign(static_cast<size_t>(S), MultiTrackDfa::kDead);
        return out;
    }

    std::vector<uint32_t> canon(num_blocks, MultiTrackDfa::kDead);
    std::vector<uint32_t> order;
    canon[block[a.initial]] = 0;
    order.push_back(block[a.initial]);
    for (size_t qi = 0; qi < order.size(); ++qi) {
        uint32_t b = order[qi];
        uint32_t s = rep_state[b];
        for (int sym = 0; sym < S; ++sym) {
            uint32_t tb = block[target(s, sym)];
            if (tb == dead_block || canon[tb] != MultiTrackDfa::kDead) continue;
            canon[tb] = static_cast<uint32_t>(order.size());
            order.push_back(tb);
        }
    }

    uint32_t m = static_cast<uint32_t>(order.size());
    check_size(m, S);
    out.initial = 0;
    out.accepting.assign(m, 0);
    out.delta.assign(static_cast<size_t>(m) * S, MultiTrackDfa::kDead);
    for (uint32_t id = 0; id < m; ++id) {
        uint32_t s = rep_state[order[id]];
        out.accepting[id] = a.accepting[s];
        for (int sym = 0; sym < S; ++sym) {
            uint32_t tb = block[target(s, sym)];
            if (tb != dead_block) out.delta[static_cast<size_t>(id) * S + sym] = canon[tb];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// product

MultiTrackDfa product(const MultiTrackDfa& a, const MultiTrackDfa& b, BoolOp op) {
    if (a.track_sizes != b.track_sizes)
        throw std::invalid_argument("product: track alphabets differ");
    const int S = a.num_symbols();
    const uint64_t na = a.num_states(), nb = b.num_states();

    auto apply = [op](bool x, bool y) {
        switch (op) {
            case BoolOp::And: return x && y;
            case BoolOp::Or: return x || y;
            case BoolOp::Diff: return x && !y;
            case BoolOp::Xor: return x != y;
        }
        return false;
    };
    // whether a pair with the given dead sides can still matter
    auto useful = [op](bool a_dead, bool b_dead) {
        if (a_dead && b_dead) return false;
        if (op == BoolOp::And) return !a_dead && !b_dead;
        if (op == BoolOp::Diff) return !a_dead;
        return true;
    };

    std::unordered_map<uint64_t, uint32_t> ids;
    std::vector<uint64_t> pairs;
    MultiTrackDfa out;
    out.track_sizes = a.track_sizes;

    auto intern = [&](uint64_t sa, uint64_t sb) -> uint32_t {
        uint64_t key = sa * (nb + 1) + sb;
        auto [it, inserted] = ids.try_emplace(key, static_cast<uint32_t>(pairs.size()));
        if (inserted) {
            pairs.push_back(key);
            bool acc_a = sa != na && a.accepting[sa];
            bool acc_b = sb != nb && b.accepting[sb];
            out.accepting.push_back(apply(acc_a, acc_b));
        }
        return it->second;
    };

    out.initial = intern(a.initial, b.initial);
    for (size_t qi = 0; qi < pairs.size(); ++qi) {
        check_size(pairs.size(), S);
        uint64_t sa = pairs[qi] / (nb + 1), sb = pairs[qi] % (nb + 1);
        out.delta.resize((qi + 1) * static_cast<size_t>(S), MultiTrackDfa::kDead);
        for (int sym = 0; sym < S; ++sym) {
            uint64_t ta = sa == na ? na : a.next(static_cast<uint32_t>(sa), sym);
            uint64_t tb = sb == nb ? nb : b.next(static_cast<uint32_t>(sb), sym);
            if (ta == MultiTrackDfa::kDead) ta = na;
            if (tb == MultiTrackDfa::kDead) tb = nb;
            if (!useful(ta == na, tb == nb)) continue;
            out.delta[qi * S + sym] = intern(ta, tb);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// validity-aware constructions

namespace {

// Generic product of an optional "payload" automaton with one validity copy
// per designated track. payload_track[i] gives the payload's track for new
// track i, or -1 if the track only needs validity.
MultiTrackDfa validity_product(const MultiTrackDfa* payload, bool payload_may_die,
                               std::span<const int> payload_track, int new_track_count,
                               const MultiTrackDfa& valid,
                               bool accept_payload_complement) {
    if (valid.num_tracks() != 1) throw std::invalid_argument("validity automaton must be single-track");
    const int digit = valid.track_sizes[0];

    MultiTrackDfa out;
    out.track_sizes.assign(new_track_count, digit);
    if (payload) {
        std::vector<int> payload_sizes(payload->track_sizes);
        for (int i = 0; i < new_track_count; ++i)
            if (payload_track[i] >= 0 && payload_sizes[payload_track[i]] != digit)
                throw std::invalid_argument("validity product: digit alphabets differ");
    }
    const int S = out.num_symbols();
    const uint32_t pn = payload ? static_cast<uint32_t>(payload->num_states()) : 0;

    std::unordered_map<std::vector<uint32_t>, uint32_t, VectorKeyHash> ids;
    std::vector<std::vector<uint32_t>> states;

    auto accepts = [&](const std::vector<uint32_t>& st) {
        size_t k = 0;
        bool acc = true;
        if (payload) {
            bool pacc = st[0] != pn && payload->accepting[st[0]];
            acc = accept_payload_complement ? !pacc : pacc;
            k = 1;
        }
        for (; k < st.size(); ++k)
            if (!valid.accepting[st[k]]) return false;
        return acc;
    };
    auto intern = [&](std::vector<uint32_t> st) -> uint32_t {
        auto [it, inserted] = ids.try_emplace(std::move(st), static_cast<uint32_t>(states.size()));
        if (inserted) states.push_back(it->first);
        return it->second;
    };

    std::vector<uint32_t> init;
    if (payload) init.push_back(payload->initial);
    for (int i = 0; i < new_track_count; ++i)
        if (!payload || payload_track[i] < 0) init.push_back(valid.initial);
    out.initial = intern(std::move(init));

    std::vector<int> digits(new_track_count);
    std::vector<int> pdigits(payload ? payload->num_tracks() : 0);
    for (size_t qi = 0; qi < states.size(); ++qi) {
        check_size(states.size(), S);
        out.delta.resize((qi + 1) * static_cast<size_t>(S), MultiTrackDfa::kDead);
        std::vector<uint32_t> st = states[qi];
        for (int sym = 0; sym < S; ++sym) {
            out.unpack(sym, digits);
            std::vector<uint32_t> nxt;
            nxt.reserve(st.size());
            bool ok = true;
            size_t k = 0;
            if (payload) {
                uint32_t ps = st[0];
                uint32_t pt;
                if (ps == pn) {
                    pt = pn;
                } else {
                    for (int i = 0; i < new_track_count; ++i)
                        if (payload_track[i] >= 0) pdigits[payload_track[i]] = digits[i];
                    pt = payload->next(ps, payload->pack(pdigits));
                    if (pt == MultiTrackDfa::kDead) pt = pn;
                }
                if (pt == pn && !payload_may_die) ok = false;
                nxt.push_back(pt);
                k = 1;
            }
            for (int i = 0; ok && i < new_track_count; ++i) {
                if (payload && payload_track[i] >= 0) continue;
                uint32_t vs = st[k];
                uint32_t vt = valid.next(vs, digits[i]);
                if (vt == MultiTrackDfa::kDead) ok = false;
                nxt.push_back(vt);
                ++k;
            }
            if (!ok) continue;
            out.delta[qi * S + sym] = intern(std::move(nxt));
        }
    }
    size_t m = states.size();
    out.accepting.assign(m, 0);
    for (size_t i = 0; i < m; ++i) out.accepting[i] = accepts(states[i]);
    return out;
}

}  // namespace

MultiTrackDfa complement_within(const MultiTrackDfa& a, const MultiTrackDfa& track_valid) {
    const int k = a.num_tracks();
    const int S = a.num_symbols();
    const uint32_t pn = static_cast<uint32_t>(a.num_states());
    const uint64_t nv = track_valid.num_states();
    for (int t : a.track_sizes)
        if (t != track_valid.track_sizes.at(0))
            throw std::invalid_argument("complement: digit alphabets differ");

    // per-track validity tuples packed into one integer alongside the
    // (completed) payload state
    uint64_t tuple_space = 1;
    for (int i = 0; i < k; ++i) tuple_space *= nv;
    // validity successor of a packed tuple, precomputed per symbol
    check_size(tuple_space, S);
    std::vector<uint64_t> tuple_next(tuple_space * S);
    {
        std::vector<int> digits(k);
        std::vector<uint64_t> decode(k);
        for (uint64_t tup = 0; tup < tuple_space; ++tup) {
            uint64_t rem = tup;
            for (int i = k - 1; i >= 0; --i) {
                decode[i] = rem % nv;
                rem /= nv;
            }
            for (int sym = 0; sym < S; ++sym) {
                a.unpack(sym, digits);
                uint64_t packed = 0;
                bool dead = false;
                for (int i = 0; i < k; ++i) {
                    uint32_t vt = track_valid.next(static_cast<uint32_t>(decode[i]), digits[i]);
                    if (vt == MultiTrackDfa::kDead) { dead = true; break; }
                    packed = packed * nv + vt;
                }
                tuple_next[tup * S + sym] = dead ? UINT64_MAX : packed;
            }
        }
    }
    std::vector<char> tuple_accepting(tuple_space, 1);
    {
        std::vector<uint64_t> decode(k);
        for (uint64_t tup = 0; tup < tuple_space; ++tup) {
            uint64_t rem = tup;
            for (int i = k - 1; i >= 0; --i) {
                decode[i] = rem % nv;
                rem /= nv;
            }
            for (int i = 0; i < k; ++i)
                if (!track_valid.accepting[decode[i]]) tuple_accepting[tup] = 0;
        }
    }

    uint64_t init_tuple = 0;
    for (int i = 0; i < k; ++i) init_tuple = init_tuple * nv + track_valid.initial;

    MultiTrackDfa widened;
    widened.track_sizes = a.track_sizes;
    std::unordered_map<uint64_t, uint32_t> ids;
    std::vector<uint64_t> states;
    auto intern = [&](uint64_t key) -> uint32_t {
        auto [it, inserted] = ids.try_emplace(key, static_cast<uint32_t>(states.size()));
        if (inserted) states.push_back(key);
        return it->second;
    };
    widened.initial = intern(static_cast<uint64_t>(a.initial) * tuple_space + init_tuple);
    ids.reserve(a.num_states() * 2 + 16);

    for (size_t qi = 0; qi < states.size(); ++qi) {
        check_size(states.size(), S);
        widened.delta.resize((qi + 1) * static_cast<size_t>(S), MultiTrackDfa::kDead);
        uint64_t key = states[qi];
        uint32_t ps = static_cast<uint32_t>(key / tuple_space);
        uint64_t tup = key % tuple_space;
        for (int sym = 0; sym < S; ++sym) {
            uint64_t vt = tuple_next[tup * S + sym];
            if (vt == UINT64_MAX) continue;
            uint32_t pt = ps == pn ? pn : a.next(ps, sym);
            if (pt == MultiTrackDfa::kDead) pt = pn;
            widened.delta[qi * S + sym] = intern(static_cast<uint64_t>(pt) * tuple_space + vt);
        }
    }
    widened.accepting.assign(states.size(), 0);
    for (size_t i = 0; i < states.size(); ++i) {
        uint32_t ps = static_cast<uint32_t>(states[i] / tuple_space);
        bool pacc = ps != pn && a.accepting[ps];
        widened.accepting[i] = !pacc && tuple_accepting[states[i] % tuple_space];
    }
    return minimize(widened);
}

MultiTrackDfa embed(const MultiTrackDfa& a, std::span<const int> positions, int new_track_count,
                    const MultiTrackDfa& track_valid) {
    std::vector<int> payload_track(new_track_count, -1);
    for (size_t i = 0; i < positions.size(); ++i) payload_track[positions[i]] = static_cast<int>(i);
    return minimize(validity_product(&a, false, payload_track, new_track_count, track_valid, false));
}

// ---------------------------------------------------------------------------
// projection

MultiTrackDfa project_track(const MultiTrackDfa& a, int track) {
    const int k = a.num_tracks();
    if (track < 0 || track >= k) throw std::invalid_argument("project: bad track index");
    const int d = a.track_sizes[track];
    const size_t n = a.num_states();
    const size_t words = (n + 63) / 64;

    MultiTrackDfa out;
    out.track_sizes = a.track_sizes;
    out.track_sizes.erase(out.track_sizes.begin() + track);
    const int S_red = out.num_symbols();

    // expand[sym_red * d + digit] = full symbol
    std::vector<int> expand(static_cast<size_t>(S_red) * d);
    {
        std::vector<int> digits_red(k - 1), digits(k);
        for (int sr = 0; sr < S_red; ++sr) {
            out.unpack(sr, digits_red);
            for (int i = 0; i < k; ++i) {
                if (i < track) digits[i] = digits_red[i];
                else if (i > track) digits[i] = digits_red[i - 1];
            }
            for (int dd = 0; dd < d; ++dd) {
                digits[track] = dd;
                expand[static_cast<size_t>(sr) * d + dd] = a.pack(digits);
            }
        }
    }

    // reduced symbol of each full symbol (drop the projected track's digit)
    const int S_full = a.num_symbols();
    std::vector<int> reduce(S_full);
    for (int sr = 0; sr < S_red; ++sr)
        for (int dd = 0; dd < d; ++dd) reduce[expand[static_cast<size_t>(sr) * d + dd]] = sr;

    auto nfa_step = [&](const std::vector<uint64_t>& set, int sr, std::vector<uint64_t>& res) {
        std::fill(res.begin(), res.end(), 0);
        const int* syms = &expand[static_cast<size_t>(sr) * d];
        for (size_t w = 0; w < words; ++w) {
            uint64_t bits = set[w];
            while (bits) {
                uint32_t s = static_cast<uint32_t>(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                for (int dd = 0; dd < d; ++dd) {
                    uint32_t t = a.next(s, syms[dd]);
                    if (t != MultiTrackDfa::kDead) res[t / 64] |= 1ull << (t % 64);
                }
            }
        }
    };

    // leading-zero closure: a shorter remaining tuple may need witnesses whose
    // projected representation is longer, i.e. reachable through all-zero
    // columns on the remaining tracks
    std::vector<uint64_t> init_set(words, 0), frontier(words, 0), step(words, 0);
    init_set[a.initial / 64] |= 1ull << (a.initial % 64);
    frontier = init_set;
    while (true) {
        nfa_step(frontier, 0, step);
        bool grew = false;
        for (size_t w = 0; w < words; ++w) {
            uint64_t add = step[w] & ~init_set[w];
            if (add) grew = true;
            init_set[w] |= add;
        }
        if (!grew) break;
        frontier = step;
    }

    // forward subset construction; keys are truncated bitsets so hashing and
    // equality stop at the highest live word
    std::unordered_map<std::vector<uint64_t>, uint32_t, BitsetKeyHash> ids;
    std::vector<const std::vector<uint64_t>*> subsets;
    auto intern = [&](std::vector<uint64_t> set) -> uint32_t {
        while (!set.empty() && set.back() == 0) set.pop_back();
        auto [it, inserted] = ids.try_emplace(std::move(set), static_cast<uint32_t>(subsets.size()));
        if (inserted) subsets.push_back(&it->first);
        return it->second;
    };

    out.initial = intern(init_set);
    std::vector<uint64_t> all(words * S_red);
    for (size_t qi = 0; qi < subsets.size(); ++qi) {
        check_size(subsets.size(), S_red);
        out.delta.resize((qi + 1) * static_cast<size_t>(S_red), MultiTrackDfa::kDead);
        const std::vector<uint64_t>& cur = *subsets[qi];
        std::fill(all.begin(), all.end(), 0);
        for (size_t w = 0; w < cur.size(); ++w) {
            uint64_t bits = cur[w];
            while (bits) {
                uint32_t s = static_cast<uint32_t>(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                const uint32_t* row = &a.delta[static_cast<size_t>(s) * S_full];
                for (int sym = 0; sym < S_full; ++sym) {
                    uint32_t t = row[sym];
                    if (t == MultiTrackDfa::kDead) continue;
                    all[static_cast<size_t>(reduce[sym]) * words + t / 64] |= 1ull << (t % 64);
                }
            }
        }
        for (int sr = 0; sr < S_red; ++sr) {
            const uint64_t* nxt = &all[static_cast<size_t>(sr) * words];
            bool empty = true;
            for (size_t w = 0; w < words; ++w)
                if (nxt[w]) { empty = false; break; }
            if (empty) continue;
            out.delta[qi * S_red + sr] = intern(std::vector<uint64_t>(nxt, nxt + words));
        }
    }
    out.accepting.assign(subsets.size(), 0);
    for (size_t i = 0; i < subsets.size(); ++i) {
        const auto& set = *subsets[i];
        for (size_t w = 0; w < set.size() && !out.accepting[i]; ++w) {
            uint64_t bits = set[w];
            while (bits) {
                uint32_t s = static_cast<uint32_t>(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                if (a.accepting[s]) { out.accepting[i] = 1; break; }
            }
        }
    }

    return minimize(out);
}

// ---------------------------------------------------------------------------
// retrack / queries / io

MultiTrackDfa retrack(const MultiTrackDfa& a, std::span<const int> old_to_new, int new_track_count) {
    if (old_to_new.size() != static_cast<size_t>(a.num_tracks()))
        throw std::invalid_argument("retrack: mapping arity mismatch");
    MultiTrackDfa out;
    out.track_sizes.assign(new_track_count, -1);
    for (size_t i = 0; i < old_to_new.size(); ++i) {
        int j = old_to_new[i];
        if (j < 0 || j >= new_track_count) throw std::invalid_argument("retrack: bad track index");
        if (out.track_sizes[j] != -1 && out.track_sizes[j] != a.track_sizes[i])
            throw std::invalid_argument("retrack: conflicting alphabets for merged track");
        out.track_sizes[j] = a.track_sizes[i];
    }
    for (int t : out.track_sizes)
        if (t == -1) throw std::invalid_argument("retrack: uncovered new track");

    const int S_new = out.num_symbols();
    const int S_old = a.num_symbols();
    (void)S_old;
    out.initial = a.initial;
    out.accepting = a.accepting;
    check_size(a.num_states(), S_new);
    out.delta.assign(a.num_states() * static_cast<size_t>(S_new), MultiTrackDfa::kDead);

    std::vector<int> digits_new(new_track_count), digits_old(a.num_tracks());
    for (int sym = 0; sym < S_new; ++sym) {
        out.unpack(sym, digits_new);
        for (size_t i = 0; i < old_to_new.size(); ++i) digits_old[i] = digits_new[old_to_new[i]];
        int old_sym = a.pack(digits_old);
        for (size_t s = 0; s < a.num_states(); ++s)
            out.delta[s * S_new + sym] = a.delta[s * S_old + old_sym];
    }
    return out;
}

bool is_empty(const MultiTrackDfa& a) {
    std::vector<char> seen(a.num_states(), 0);
    std::vector<uint32_t> stack{a.initial};
    seen[a.initial] = 1;
    const int S = a.num_symbols();
    while (!stack.empty()) {
        uint32_t s = stack.back();
        stack.pop_back();
        if (a.accepting[s]) return false;
        for (int sym = 0; sym < S; ++sym) {
            uint32_t t = a.next(s, sym);
            if (t != MultiTrackDfa::kDead && !seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
    return true;
}

bool accepts_all_valid(const MultiTrackDfa& a, const MultiTrackDfa& track_valid) {
    return is_empty(complement_within(a, track_valid));
}

bool accepts_tracks(const MultiTrackDfa& a, const std::vector<std::string>& tracks) {
    if (tracks.size() != static_cast<size_t>(a.num_tracks()))
        throw std::invalid_argument("accepts_tracks: arity mismatch");
    size_t len = 0;
    for (const auto& t : tracks) len = std::max(len, t.size());
    std::vector<int> digits(a.num_tracks());
    uint32_t s = a.initial;
    for (size_t i = 0; i < len; ++i) {
        for (size_t t = 0; t < tracks.size(); ++t) {
            size_t pad = len - tracks[t].size();
            digits[t] = i < pad ? 0 : tracks[t][i - pad] - '0';
            if (digits[t] < 0 || digits[t] >= a.track_sizes[t])
                throw std::invalid_argument("accepts_tracks: digit outside alphabet");
        }
        s = a.next(s, a.pack(digits));
        if (s == MultiTrackDfa::kDead) return false;
    }
    return a.accepting[s];
}

std::string dfa_to_text(const MultiTrackDfa& a) {
    std::ostringstream out;
    out << "tracks " << a.num_tracks() << "\n";
    for (int t : a.track_sizes) {
        out << "alphabet";
        for (int d = 0; d < t; ++d) out << ' ' << d;
        out << "\n";
    }
    out << "initial " << a.initial << "\n";
    out << "accepting";
    for (size_t s = 0; s < a.num_states(); ++s)
        if (a.accepting[s]) out << ' ' << s;
    out << "\n";
    const int S = a.num_symbols();
    std::vector<int> digits(a.num_tracks());
    for (size_t s = 0; s < a.num_states(); ++s) {
        for (int sym = 0; sym < S; ++sym) {
            uint32_t t = a.next(static_cast<uint32_t>(s), sym);
            if (t == MultiTrackDfa::kDead) continue;
            a.unpack(sym, digits);
            out << s << " (";
            for (size_t i = 0; i < digits.size(); ++i) out << (i ? "," : "") << digits[i];
            out << ") " << t << "\n";
        }
    }
    return out.str();
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

}  // namespace

MultiTrackDfa dfa_from_text(std::string_view text) {
    MultiTrackDfa a;
    int tracks = -1;
    std::vector<std::tuple<uint32_t, std::vector<int>, uint32_t>> transitions;
    std::vector<uint32_t> accepting_states;
    uint32_t max_state = 0;
    bool saw_initial = false;

    for (const std::string& line : split_lines(text)) {
        std::istringstream in(line);
        std::string head;
        if (!(in >> head)) continue;
        if (head == "tracks") {
            in >> tracks;
        } else if (head == "alphabet") {
            int d, count = 0;
            while (in >> d) ++count;
            a.track_sizes.push_back(count);
        } else if (head == "initial") {
            in >> a.initial;
            saw_initial = true;
            max_state = std::max(max_state, a.initial);
        } else if (head == "accepting") {
            uint32_t s;
            while (in >> s) {
                accepting_states.push_back(s);
                max_state = std::max(max_state, s);
            }
        } else if (head == "output" || head == "seq" || head == "recurrence") {
            continue;  // consumed by the layered formats
        } else {
            uint32_t from = static_cast<uint32_t>(std::stoul(head));
            std::string tuple;
            in >> tuple;
            uint32_t to;
            in >> to;
            if (tuple.size() < 2 || tuple.front() != '(' || tuple.back() != ')')
                throw std::invalid_argument("automaton text: bad transition: " + line);
            std::vector<int> digits;
            std::string body = tuple.substr(1, tuple.size() - 2);
            if (!body.empty()) {
                std::istringstream ds(body);
                std::string piece;
                while (std::getline(ds, piece, ',')) digits.push_back(std::stoi(piece));
            }
            transitions.emplace_back(from, std::move(digits), to);
            max_state = std::max({max_state, from, to});
        }
    }
    if (tracks < 0 || static_cast<size_t>(tracks) != a.track_sizes.size())
        throw std::invalid_argument("automaton text: track count mismatch");
    if (!saw_initial) throw std::invalid_argument("automaton text: missing initial state");

    size_t n = max_state + 1;
    const int S = a.num_symbols();
    a.accepting.assign(n, 0);
    for (uint32_t s : accepting_states) a.accepting[s] = 1;
    a.delta.assign(n * static_cast<size_t>(S), MultiTrackDfa::kDead);
    for (auto& [from, digits, to] : transitions) {
        if (digits.size() != static_cast<size_t>(tracks))
            throw std::invalid_argument("automaton text: tuple arity mismatch");
        a.delta[static_cast<size_t>(from) * S + a.pack(digits)] = to;
    }
    return a;
}

std::optional<int> Dfao::run(std::string_view digits) const {
    uint32_t s = shell.initial;
    for (char c : digits) {
        int d = c - '0';
        if (d < 0 || d >= shell.track_sizes[0]) throw std::invalid_argument("dfao: bad digit");
        s = shell.next(s, d);
        if (s == MultiTrackDfa::kDead) return std::nullopt;
    }
    return outputs[s];
}

Dfao minimize(const Dfao& d) {
    // refine with the output as part of the signature: encode outputs into
    // acceptance by refining over an output-indexed partition first
    const int S = d.shell.num_symbols();
    const uint32_t n = static_cast<uint32_t>(d.shell.num_states());
    const uint32_t dead = n;
    auto target = [&](uint32_t s, int sym) -> uint32_t {
        if (s == dead) return dead;
        uint32_t t = d.shell.next(s, sym);
        return t == MultiTrackDfa::kDead ? dead : t;
    };

    std::vector<uint32_t> block(n + 1);
    std::unordered_map<int, uint32_t> out_ids;
    uint32_t num_blocks = 1;  // block 0 = dead
    block[dead] = 0;
    for (uint32_t s = 0; s < n; ++s) {
        auto [it, inserted] = out_ids.try_emplace(d.outputs[s], num_blocks);
        if (inserted) ++num_blocks;
        block[s] = it->second;
    }

    std::vector<uint32_t> next_block(n + 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int sym = 0; sym < S; ++sym) {
            std::unordered_map<uint64_t, uint32_t> ids;
            uint32_t fresh = 0;
            for (uint32_t s = 0; s <= n; ++s) {
                uint64_t key = (static_cast<uint64_t>(block[s]) << 32) | block[target(s, sym)];
                auto [it, inserted] = ids.try_emplace(key, fresh);
                if (inserted) ++fresh;
                next_block[s] = it->second;
            }
            if (fresh != num_blocks) {
                block.swap(next_block);
                num_blocks = fresh;
                changed = true;
            }
        }
    }

    const uint32_t dead_block = block[dead];
    std::vector<uint32_t> rep_state(num_blocks, MultiTrackDfa::kDead);
    for (uint32_t s = 0; s < n; ++s)
        if (block[s] != dead_block && rep_state[block[s]] == MultiTrackDfa::kDead)
            rep_state[block[s]] = s;

    std::vector<uint32_t> canon(num_blocks, MultiTrackDfa::kDead);
    std::vector<uint32_t> order;
    canon[block[d.shell.initial]] = 0;
    order.push_back(block[d.shell.initial]);
    for (size_t qi = 0; qi < order.size(); ++qi) {
        uint32_t s = rep_state[order[qi]];
        for (int sym = 0; sym < S; ++sym) {
            uint32_t tb = block[target(s, sym)];
            if (tb == dead_block || canon[tb] != MultiTrackDfa::kDead) continue;
            canon[tb] = static_cast<uint32_t>(order.size());
            order.push_back(tb);
        }
    }

    Dfao out;
    out.shell.track_sizes = d.shell.track_sizes;
    uint32_t m = static_cast<uint32_t>(order.size());
    out.shell.initial = 0;
    out.shell.accepting.assign(m, 1);
    out.shell.delta.assign(static_cast<size_t>(m) * S, MultiTrackDfa::kDead);
    out.outputs.assign(m, 0);
    for (uint32_t id = 0; id < m; ++id) {
        uint32_t s = rep_state[order[id]];
        out.outputs[id] = d.outputs[s];
        for (int sym = 0; sym < S; ++sym) {
            uint32_t tb = block[target(s, sym)];
            if (tb != dead_block) out.shell.delta[static_cast<size_t>(id) * S + sym] = canon[tb];
        }
    }
    return out;
}

std::string dfao_to_text(const Dfao& d) {
    std::string text = dfa_to_text(d.shell);
    std::ostringstream out;
    out << text;
    for (size_t s = 0; s < d.outputs.size(); ++s) out << "output " << s << ' ' << d.outputs[s] << "\n";
    return out.str();
}

Dfao dfao_from_text(std::string_view text) {
    Dfao d;
    d.shell = dfa_from_text(text);
    d.outputs.assign(d.shell.num_states(), 0);
    for (const std::string& line : split_lines(text)) {
        std::istringstream in(line);
        std::string head;
        if (!(in >> head) || head != "output") continue;
        size_t s;
        int v;
        in >> s >> v;
        d.outputs[s] = v;
    }
    return d;
}

uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace rote
