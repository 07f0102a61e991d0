#include "rote/search.hpp"

#include <cstring>
#include <stdexcept>
#include <unordered_map>

namespace rote {

namespace {

// Depth-first growth with incremental validity state. Appending a letter can
// only create factors that are suffixes of the new word, so per-period match
// runs and one new candidate factor per length are all that need checking.
// Final maximal words are re-validated against the naive oracles by callers.
class TreeSearch {
public:
    TreeSearch(const SearchConfig& cfg) : cfg_(cfg) {
        if (!(cfg.threshold > Rational(1)))
            throw std::invalid_argument("grow_tree: threshold must exceed 1");
        thr_num_ = cfg.threshold.num().to_int64();
        thr_den_ = cfg.threshold.den().to_int64();
        size_t reserve = cfg.max_length.value_or(4096) + 2;
        word_.reserve(reserve);
        pow_.assign(1, 1);
        hash_.assign(1, 0);
        while (pow_.size() < reserve) pow_.push_back(pow_.back() * kBase);
    }

    SearchResult run() {
        result_ = SearchResult{};
        result_.level_counts.assign(1, 1);  // the empty word
        factors_.clear();
        counts_.clear();
        for (char c : {'0', '1'}) {
            if (cfg_.first_letter_fixed && c != '0') continue;
            Undo undo;
            bool ok = push(c, undo);
            if (ok) visit();
            pop(undo);
        }
        result_.max_depth = result_.level_counts.size() - 1;
        return result_;
    }

private:
    static constexpr uint64_t kBase = 0x100000001b3ull;

    struct Undo {
        std::vector<std::pair<uint32_t, uint32_t>> zeroed_runs;  // (p, old value)
        uint32_t added_begin = 0;                                // index into added_
    };

    const SearchConfig& cfg_;
    long long thr_num_ = 5, thr_den_ = 2;
    Word word_;
    std::vector<uint32_t> run_;    // run_[p] = matches at distance p ending at the word end
    std::vector<uint64_t> hash_;   // prefix hashes
    std::vector<uint64_t> pow_;
    // per length: hash of factor -> start positions of distinct factors
    std::vector<std::unordered_map<uint64_t, std::vector<uint32_t>>> factors_;
    std::vector<uint32_t> counts_;  // distinct factor count per length
    std::vector<uint32_t> added_;   // stack of lengths whose factor set grew
    SearchResult result_;

    uint64_t factor_hash(size_t pos, size_t len) const {
        return hash_[pos + len] - hash_[pos] * pow_[len];
    }

    // Appends c and updates all incremental state. Returns false if the new
    // word violates the Rote bound or the exponent predicate; the caller must
    // pop() either way.
    bool push(char c, Undo& undo) {
        word_.push_back(c);
        hash_.push_back(hash_.back() * kBase + static_cast<unsigned char>(c));
        size_t len = word_.size();

        bool ok = true;
        run_.push_back(0);  // slot for period len-1; run_[0] stays unused
        for (size_t p = 1; p < len; ++p) {
            uint32_t old = run_[p];
            if (word_[len - 1 - p] == c) {
                run_[p] = old + 1;
            } else {
                if (old) undo.zeroed_runs.emplace_back(static_cast<uint32_t>(p), old);
                run_[p] = 0;
            }
            if (ok && run_[p]) {
                long long flen = static_cast<long long>(run_[p]) + static_cast<long long>(p);
                long long lhs = flen * thr_den_;
                long long rhs = thr_num_ * static_cast<long long>(p);
                if (cfg_.strict ? lhs >= rhs : lhs > rhs) ok = false;
            }
        }

        if (factors_.size() < len + 1) {
            factors_.resize(len + 1);
            counts_.resize(len + 1, 0);
        }
        undo.added_begin = static_cast<uint32_t>(added_.size());
        for (size_t i = 1; i <= len; ++i) {
            size_t pos = len - i;
            uint64_t h = factor_hash(pos, i);
            auto& bucket = factors_[i][h];
            bool found = false;
            for (uint32_t q : bucket) {
                if (std::memcmp(word_.data() + q, word_.data() + pos, i) == 0) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                bucket.push_back(static_cast<uint32_t>(pos));
                ++counts_[i];
                added_.push_back(static_cast<uint32_t>(i));
                if (ok && counts_[i] > 2 * i) ok = false;
            }
        }
        return ok;
    }

    void pop(const Undo& undo) {
        size_t len = word_.size();
        char c = word_.back();

        while (added_.size() > undo.added_begin) {
            uint32_t i = added_.back();
            added_.pop_back();
            uint64_t h = factor_hash(len - i, i);
            auto it = factors_[i].find(h);
            it->second.pop_back();  // LIFO: the entry added at this node is last
            if (it->second.empty()) factors_[i].erase(it);
            --counts_[i];
        }

        for (size_t p = 1; p + 1 < len; ++p)
            if (word_[len - 1 - p] == c) --run_[p];
        for (auto [p, old] : undo.zeroed_runs) run_[p] = old;
        run_.pop_back();

        word_.pop_back();
        hash_.pop_back();
    }

    void visit() {
        size_t len = word_.size();
        if (result_.level_counts.size() < len + 1) result_.level_counts.resize(len + 1, 0);
        ++result_.level_counts[len];

        bool at_cap = cfg_.max_length && len >= *cfg_.max_length;
        bool any_child = false;
        for (char c : {'0', '1'}) {
            Undo undo;
            bool ok = push(c, undo);
            if (ok) {
                any_child = true;
                if (!at_cap) visit();
            }
            pop(undo);
        }
        if (any_child && at_cap) result_.truncated = true;
        if (!any_child) result_.maximal_words.push_back(word_);
    }
};

}  // namespace

SearchResult grow_tree(const SearchConfig& cfg) {
    TreeSearch search(cfg);
    return search.run();
}

std::set<Word> symmetry_closure(const std::set<Word>& words) {
    std::set<Word> out = words;
    std::vector<Word> queue(words.begin(), words.end());
    while (!queue.empty()) {
        Word w = std::move(queue.back());
        queue.pop_back();
        for (Word v : {reversed(w), complemented01(w)}) {
            if (out.insert(v).second) queue.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<size_t> level_counts(const SearchConfig& cfg, size_t n_max) {
    SearchConfig capped = cfg;
    capped.max_length = n_max;
    return grow_tree(capped).level_counts;
}

}  // namespace rote
