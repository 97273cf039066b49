// Brouwer-Zimmermann minimum distance for cyclic codes.
//
// One systematic generator matrix on positions [0, k) suffices: a cyclic
// shift of a codeword is a codeword of equal weight, so enumerating messages
// of weight <= w on [0, k) also covers every other window of k consecutive
// positions. After round w an unseen codeword has at least w + 1 nonzeros on
// each of the r = n / k disjoint windows plus w + 1 - (k - (n - rk)) on the
// tail window [n - k, n).

#include "cyclocode/codes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cyclo {

namespace {

struct Binary {
    using Vec = std::vector<std::uint64_t>;
    std::size_t words;
    explicit Binary(std::size_t len) : words((len + 63) / 64) {}
    Vec pack(const std::vector<Coeff>& c) const {
        Vec v(words, 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i]) v[i / 64] |= std::uint64_t{1} << (i % 64);
        return v;
    }
    void add(Vec& dst, const Vec& a, const Vec& b) const {
        for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] ^ b[i];
    }
    int weight(const Vec& v) const {
        int w = 0;
        for (auto x : v) w += std::popcount(x);
        return w;
    }
};

// one-hot planes: bit set in `one` where the entry is 1, in `two` where it is 2
struct Ternary {
    using Vec = std::vector<std::uint64_t>;
    std::size_t words;
    explicit Ternary(std::size_t len) : words((len + 63) / 64) {}
    Vec pack(const std::vector<Coeff>& c) const {
        Vec v(2 * words, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 1) v[i / 64] |= std::uint64_t{1} << (i % 64);
            if (c[i] == 2) v[words + i / 64] |= std::uint64_t{1} << (i % 64);
        }
        return v;
    }
    void add(Vec& dst, const Vec& a, const Vec& b) const {
        for (std::size_t i = 0; i < words; ++i) {
            const std::uint64_t a1 = a[i], a2 = a[words + i], b1 = b[i], b2 = b[words + i];
            const std::uint64_t a0 = ~(a1 | a2), b0 = ~(b1 | b2);
            dst[i] = (a0 & b1) | (a1 & b0) | (a2 & b2);
            dst[words + i] = (a0 & b2) | (a2 & b0) | (a1 & b1);
        }
    }
    int weight(const Vec& v) const {
        int w = 0;
        for (std::size_t i = 0; i < words; ++i) w += std::popcount(v[i] | v[words + i]);
        return w;
    }
};

struct Generic {
    using Vec = std::vector<Coeff>;
    const GaloisField* F;
    std::size_t len;
    Generic(const GaloisField& f, std::size_t l) : F(&f), len(l) {}
    Vec pack(const std::vector<Coeff>& c) const {
        Vec v(len, 0);
        std::copy(c.begin(), c.end(), v.begin());
        return v;
    }
    void add(Vec& dst, const Vec& a, const Vec& b) const {
        for (std::size_t i = 0; i < len; ++i) dst[i] = F->add(a[i], b[i]);
    }
    int weight(const Vec& v) const {
        return static_cast<int>(len - static_cast<std::size_t>(std::count(v.begin(), v.end(), 0)));
    }
};

struct Search {
    i64 n, k, r, tail;
    i64 upper;
    std::uint64_t effort = 0, budget;
    bool aborted = false;

    i64 round_bound(i64 w) const { return r * (w + 1) + std::max<i64>(0, w + 1 - (k - tail)); }
};

template <class Space>
class Enumerator {
public:
    using Vec = typename Space::Vec;

    Enumerator(const Space& sp, const GaloisField& F, const std::vector<std::vector<Coeff>>& parity, Search& s)
        : sp_(sp), s_(s), q_(F.q()) {
        scaled_.resize(parity.size());
        for (std::size_t i = 0; i < parity.size(); ++i) {
            scaled_[i].resize(static_cast<std::size_t>(q_));
            for (i64 c = 1; c < q_; ++c) {
                std::vector<Coeff> v(parity[i].size());
                for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.mul(parity[i][j], static_cast<Coeff>(c));
                scaled_[i][c] = sp_.pack(v);
            }
        }
    }

    // all messages of weight exactly w whose first nonzero coefficient is 1
    void run(i64 w, i64 target) {
        w_ = w;
        target_ = target;
        stack_.assign(static_cast<std::size_t>(w) + 1, sp_.pack({}));
        rec(0, 0);
    }

private:
    void rec(i64 depth, i64 start) {
        if (s_.aborted || s_.upper <= target_) return;
        const Vec& cur = stack_[depth];
        const i64 k = s_.k;
        if (depth == w_ - 1) {
            if (++s_.effort > s_.budget) {
                s_.aborted = true;
                return;
            }
            Vec& tmp = stack_[depth + 1];
            for (i64 i = start; i < k; ++i)
                for (i64 c = 1; c < (depth == 0 ? 2 : q_); ++c) {
                    sp_.add(tmp, cur, scaled_[i][c]);
                    i64 wt = w_ + sp_.weight(tmp);
                    if (wt < s_.upper) s_.upper = wt;
                }
            return;
        }
        for (i64 i = start; i <= k - (w_ - depth); ++i)
            for (i64 c = 1; c < (depth == 0 ? 2 : q_); ++c) {
                sp_.add(stack_[depth + 1], cur, scaled_[i][c]);
                rec(depth + 1, i + 1);
                if (s_.aborted) return;
            }
    }

    const Space& sp_;
    Search& s_;
    i64 q_;
    i64 w_ = 0, target_ = 0;
    std::vector<std::vector<Vec>> scaled_;
    std::vector<Vec> stack_;
};

template <class Space>
void enumerate(const Space& sp, const GaloisField& F, const std::vector<std::vector<Coeff>>& parity, Search& s,
               i64& lower) {
    Enumerator<Space> en(sp, F, parity, s);
    for (i64 w = 1; w <= s.k; ++w) {
        en.run(w, lower);
        if (s.aborted) return;
        lower = (w == s.k) ? s.upper : std::max(lower, std::min(s.round_bound(w), s.upper));
        if (lower >= s.upper) return;
    }
}

}  // namespace

DistanceResult min_distance(const GaloisField& F, const CyclicCode& code, const DistanceOptions& opt) {
    if (!code.generator) throw std::invalid_argument("min_distance needs the generator polynomial");
    const i64 n = code.params.n, k = code.dimension;
    if (k <= 0) throw std::invalid_argument("min_distance of the zero code is undefined");
    const Polynomial& g = *code.generator;
    if (g.degree() != n - k) throw std::logic_error("generator degree does not match the dimension");

    // rows x^i g(x): columns [0, k) are lower triangular with g0 on the diagonal
    std::vector<std::vector<Coeff>> G(static_cast<std::size_t>(k), std::vector<Coeff>(static_cast<std::size_t>(n), 0));
    for (i64 i = 0; i < k; ++i)
        for (int j = 0; j <= g.degree(); ++j) G[i][i + j] = g.coeffs[j];
    for (i64 c = k - 1; c >= 0; --c) {
        const Coeff inv = F.inv(G[c][c]);
        for (auto& x : G[c]) x = F.mul(x, inv);
        for (i64 rr = 0; rr < c; ++rr) {
            const Coeff f = G[rr][c];
            if (!f) continue;
            for (i64 j = c; j < n; ++j) G[rr][j] = F.sub(G[rr][j], F.mul(f, G[c][j]));
        }
    }
    std::vector<std::vector<Coeff>> parity(static_cast<std::size_t>(k));
    i64 best = n;
    for (i64 i = 0; i < k; ++i) {
        parity[i].assign(G[i].begin() + k, G[i].end());
        best = std::min<i64>(best, 1 + static_cast<i64>(parity[i].size()) -
                                       static_cast<i64>(std::count(parity[i].begin(), parity[i].end(), 0)));
    }
    i64 wg = 0;
    for (Coeff c : g.coeffs) wg += c != 0;
    best = std::min(best, wg);

    Search s{n, k, n / k, n - (n / k) * k, best, 0, opt.budget};
    i64 lower = std::max<i64>({1, opt.seed_lower, longest_run(n, code.defining_set) + 1});
    lower = std::min(lower, s.upper);
    if (lower < s.upper) {
        const auto len = static_cast<std::size_t>(n - k);
        if (F.q() == 2)
            enumerate(Binary(len), F, parity, s, lower);
        else if (F.q() == 3)
            enumerate(Ternary(len), F, parity, s, lower);
        else
            enumerate(Generic(F, len), F, parity, s, lower);
    }
    DistanceResult res;
    res.upper = s.upper;
    res.lower = std::min(lower, s.upper);
    res.effort = s.effort;
    res.exact = res.lower == res.upper;
    res.status = (s.aborted && !res.exact) ? DistanceStatus::budget_exhausted : DistanceStatus::exact;
    return res;
}

}  // namespace cyclo
