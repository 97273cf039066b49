#include "cyclocode/cosets.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclo {

namespace {

void check_gamma(i64 n, i64 gamma) {
    if (gamma < 0 || gamma >= n)
        throw std::invalid_argument("gamma " + std::to_string(gamma) + " out of range [0, " + std::to_string(n) + ")");
}

i64 step(i64 x, i64 q, i64 n) { return static_cast<i64>(static_cast<i128>(x) * q % n); }

}  // namespace

FamilyParams FamilyParams::make(i64 q, i64 m, i64 lambda) {
    FamilyParams fp;
    fp.pp = prime_power(q);
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (lambda < 1 || (q - 1) % lambda != 0)
        throw std::invalid_argument("lambda = " + std::to_string(lambda) + " does not divide q - 1 = " + std::to_string(q - 1));
    fp.q = q;
    fp.m = m;
    fp.lambda = lambda;
    try {
        fp.M = ipow(q, static_cast<int>(m)) + 1;
        if (fp.M > std::numeric_limits<i64>::max() / lambda) throw std::overflow_error("n");
        fp.n = lambda * fp.M;
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("n = lambda (q^m + 1) exceeds 63 bits");
    }
    if (std::gcd(fp.n, q) != 1) throw std::invalid_argument("gcd(n, q) != 1");
    if (mult_order(q, fp.n) != 2 * m) throw std::invalid_argument("ord_n(q) != 2m");
    return fp;
}

bool operator==(const FamilyParams& a, const FamilyParams& b) {
    return a.q == b.q && a.m == b.m && a.lambda == b.lambda;
}

i64 residue_a(const FamilyParams& fp, i64 gamma) {
    i64 a = gamma % fp.lambda;
    return a == 0 ? fp.lambda : a;
}

Coset coset(i64 n, i64 q, i64 gamma) {
    check_gamma(n, gamma);
    Coset c;
    i64 x = gamma;
    do {
        c.elements.push_back(x);
        x = step(x, q, n);
    } while (x != gamma);
    c.size = static_cast<i64>(c.elements.size());
    c.leader = *std::min_element(c.elements.begin(), c.elements.end());
    return c;
}

Coset coset(const FamilyParams& fp, i64 gamma) {
    Coset c = coset(fp.n, fp.q, gamma);
    c.residue_a = residue_a(fp, gamma);
    return c;
}

i64 leader_of(const FamilyParams& fp, i64 gamma) {
    check_gamma(fp.n, gamma);
    i64 best = gamma, x = step(gamma, fp.q, fp.n);
    while (x != gamma) {
        best = std::min(best, x);
        x = step(x, fp.q, fp.n);
    }
    return best;
}

CosetPartition::CosetPartition(i64 n, i64 q) : n_(n), q_(q) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (std::gcd(n, q) != 1) throw std::invalid_argument("gcd(n, q) != 1");
    if (n > static_cast<i64>(std::numeric_limits<std::uint32_t>::max()))
        throw std::invalid_argument("n too large for an explicit partition");
    build(0);
}

CosetPartition::CosetPartition(const FamilyParams& fp) : n_(fp.n), q_(fp.q), params_(fp) {
    if (fp.n > static_cast<i64>(std::numeric_limits<std::uint32_t>::max()))
        throw std::invalid_argument("n too large for an explicit partition");
    build(fp.lambda);
}

void CosetPartition::build(i64 lambda) {
    constexpr auto unseen = std::numeric_limits<std::uint32_t>::max();
    index_.assign(static_cast<std::size_t>(n_), unseen);
    // scanning upward means the first unseen residue of each orbit is its leader
    for (i64 g = 0; g < n_; ++g) {
        if (index_[g] != unseen) continue;
        Coset c;
        c.leader = g;
        if (lambda > 0) c.residue_a = (g % lambda == 0) ? lambda : g % lambda;
        auto id = static_cast<std::uint32_t>(cosets_.size());
        i64 x = g;
        do {
            c.elements.push_back(x);
            index_[x] = id;
            x = step(x, q_, n_);
        } while (x != g);
        c.size = static_cast<i64>(c.elements.size());
        cosets_.push_back(std::move(c));
    }
}

std::vector<i64> CosetPartition::leaders() const {
    std::vector<i64> out;
    out.reserve(cosets_.size());
    for (const auto& c : cosets_) out.push_back(c.leader);
    return out;
}

i64 reflect(const FamilyParams& fp, i64 gamma) {
    check_gamma(fp.n, gamma);
    i64 a = residue_a(fp, gamma);
    if (gamma <= a * fp.M) return (a * fp.M - gamma) % fp.n;  // gamma = 0 maps to n = 0
    return (fp.lambda + a) * fp.M - gamma;
}

i64 fold(const FamilyParams& fp, i64 gamma, i64 t) {
    check_gamma(fp.n, gamma);
    if (t < 0) throw std::invalid_argument("fold: t must be nonnegative");
    i64 a = residue_a(fp, gamma);
    i64 x = static_cast<i64>(static_cast<i128>(gamma) * powmod(fp.q, t, fp.n) % fp.n);
    i128 aM = static_cast<i128>(a) * fp.M;
    i128 laM = static_cast<i128>(fp.lambda + a) * fp.M;
    if (2 * static_cast<i128>(x) > aM && x < aM) return static_cast<i64>(aM - x);
    if (2 * static_cast<i128>(x) > laM && x < fp.n) return static_cast<i64>(laM - x);
    return x;
}

bool half_period_fold_holds(const FamilyParams& fp, i64 gamma) {
    Coset c = coset(fp, gamma);
    i64 half = std::max<i64>(1, c.size / 2);
    i64 best = fold(fp, gamma, 0);
    for (i64 t = 1; t < half; ++t) best = std::min(best, fold(fp, gamma, t));
    return best == c.leader;
}

bool negation_in_same_coset(const FamilyParams& fp, i64 gamma, Mode mode) {
    check_gamma(fp.n, gamma);
    if (mode == Mode::bruteforce) {
        i64 neg = (fp.n - gamma) % fp.n;
        i64 x = gamma;
        do {
            if (x == neg) return true;
            x = step(x, fp.q, fp.n);
        } while (x != gamma);
        return false;
    }
    if (gamma % fp.lambda == 0) return true;
    return fp.q % 4 == 3 && fp.lambda % 2 == 0 && fp.m % 2 == 0 && gamma % (fp.n / 4) == 0;
}

bool negation_in_same_coset(const CosetPartition& part, i64 gamma) {
    check_gamma(part.n(), gamma);
    return part.same_coset(gamma, (part.n() - gamma) % part.n());
}

}  // namespace cyclo
