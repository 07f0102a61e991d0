#include "rote/linrep.hpp"

#include <algorithm>

namespace rote {

int LinearRepresentation::num_symbols() const {
    int s = 1;
    for (int t : param_sizes) s *= t;
    return s;
}

BigInt LinearRepresentation::value_symbols(std::span<const int> symbols) const {
    const size_t d = dim();
    std::vector<BigInt> row = u;
    for (int sym : symbols) {
        const auto& m = mu.at(sym);
        std::vector<BigInt> nxt(d, BigInt(0));
        for (size_t i = 0; i < d; ++i) {
            if (row[i].is_zero()) continue;
            for (size_t j = 0; j < d; ++j) {
                long long e = m[i * d + j];
                if (e) nxt[j] += row[i] * BigInt(e);
            }
        }
        row = std::move(nxt);
    }
    BigInt acc(0);
    for (size_t i = 0; i < d; ++i)
        if (!v[i].is_zero()) acc += row[i] * v[i];
    return acc;
}

BigInt linrep_value(const LinearRepresentation& lr, const NumerationSystem& sys,
                    unsigned long long n) {
    if (lr.params.size() != 1)
        throw std::invalid_argument("linrep_value: expected a single parameter");
    std::string rep = sys.represent(n);
    std::vector<int> symbols;
    symbols.reserve(rep.size());
    for (char c : rep) symbols.push_back(c - '0');
    return lr.value_symbols(symbols);
}

namespace {

// integer row-space basis in echelon form; vectors kept primitive
struct RowBasis {
    std::vector<std::vector<BigInt>> rows;  // sorted by pivot index
    std::vector<size_t> pivots;

    static void normalize(std::vector<BigInt>& v) {
        BigInt g(0);
        for (const auto& x : v)
            if (!x.is_zero()) g = g.is_zero() ? x.abs() : BigInt::gcd(g, x);
        if (g.is_zero() || g == BigInt(1)) {
        } else {
            for (auto& x : v) x = x / g;
        }
        for (const auto& x : v) {
            if (x.is_zero()) continue;
            if (x.sign() < 0)
                for (auto& y : v) y = -y;
            break;
        }
    }

    // reduce v against the basis; true if a nonzero remainder was inserted
    bool insert(std::vector<BigInt> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            size_t p = pivots[r];
            if (v[p].is_zero()) continue;
            BigInt a = rows[r][p], b = v[p];
            for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] * a - rows[r][j] * b;
        }
        size_t pivot = v.size();
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) { pivot = j; break; }
        if (pivot == v.size()) return false;
        normalize(v);
        size_t at = 0;
        while (at < rows.size() && pivots[at] < pivot) ++at;
        rows.insert(rows.begin() + at, std::move(v));
        pivots.insert(pivots.begin() + at, pivot);
        return true;
    }
};

}  // namespace

bool linrep_equal(const LinearRepresentation& a, const LinearRepresentation& b) {
    if (a.param_sizes != b.param_sizes)
        throw std::invalid_argument("linrep_equal: parameter alphabets differ");
    const size_t da = a.dim(), db = b.dim(), d = da + db;
    const int S = a.num_symbols();

    std::vector<BigInt> u(d, BigInt(0)), v(d, BigInt(0));
    for (size_t i = 0; i < da; ++i) u[i] = a.u[i];
    for (size_t i = 0; i < db; ++i) u[da + i] = b.u[i];
    for (size_t i = 0; i < da; ++i) v[i] = a.v[i];
    for (size_t i = 0; i < db; ++i) v[da + i] = -b.v[i];

    auto apply = [&](const std::vector<BigInt>& row, int sym) {
        std::vector<BigInt> out(d, BigInt(0));
        const auto& ma = a.mu[sym];
        const auto& mb = b.mu[sym];
        for (size_t i = 0; i < da; ++i) {
            if (row[i].is_zero()) continue;
            for (size_t j = 0; j < da; ++j) {
                long long e = ma[i * da + j];
                if (e) out[j] += row[i] * BigInt(e);
            }
        }
        for (size_t i = 0; i < db; ++i) {
            if (row[da + i].is_zero()) continue;
            for (size_t j = 0; j < db; ++j) {
                long long e = mb[i * db + j];
                if (e) out[da + j] += row[da + i] * BigInt(e);
            }
        }
        return out;
    };

    auto dot = [&](const std::vector<BigInt>& row) {
        BigInt acc(0);
        for (size_t i = 0; i < d; ++i)
            if (!row[i].is_zero() && !v[i].is_zero()) acc += row[i] * v[i];
        return acc;
    };

    RowBasis basis;
    std::vector<std::vector<BigInt>> work;
    if (!dot(u).is_zero()) return false;
    if (basis.insert(u)) work.push_back(u);
    while (!work.empty()) {
        std::vector<BigInt> w = std::move(work.back());
        work.pop_back();
        for (int sym = 0; sym < S; ++sym) {
            std::vector<BigInt> next = apply(w, sym);
            if (!dot(next).is_zero()) return false;
            if (basis.insert(next)) work.push_back(std::move(next));
        }
        if (basis.rows.size() > d) throw std::logic_error("linrep_equal: basis overflow");
    }
    return true;
}

}  // namespace rote
