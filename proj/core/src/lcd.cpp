#include "cyclocode/lcd.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cyclo {

namespace {

// sum over eps | t0 of mu(eps) q^(mult t0 / eps)
BigInt inner(i64 q, i64 t0, i64 mult) {
    BigInt s = 0;
    for (i64 e : divisors(t0)) {
        int mu = mobius(e);
        if (mu) s += mu * bpow(q, static_cast<unsigned>(mult * t0 / e));
    }
    return s;
}

// Accumulates a sum of fractions num/den exactly over a common denominator.
struct Frac {
    BigInt num = 0, den = 1;
    void add(const BigInt& a, const BigInt& b) {
        num = num * b + a * den;
        den *= b;
        BigInt g = boost::multiprecision::gcd(num, den);
        if (g != 0) {
            num /= g;
            den /= g;
        }
    }
    BigInt value() const {
        if (num % den != 0) throw std::domain_error("closed-form |Pi| is not an integer");
        return num / den;
    }
};

}  // namespace

LcdReport pi_set(const CosetPartition& part) {
    if (!part.params()) throw std::invalid_argument("pi_set needs family parameters");
    LcdReport r;
    r.params = *part.params();
    const i64 n = part.n();
    r.Gamma = part.leaders();
    std::set<i64> removed;
    for (i64 g : r.Gamma) {
        i64 neg = (n - g) % n;
        if (part.same_coset(g, neg)) continue;
        removed.insert(std::max(g, part.leader_of(neg)));
    }
    r.removed.assign(removed.begin(), removed.end());
    std::set_difference(r.Gamma.begin(), r.Gamma.end(), r.removed.begin(), r.removed.end(), std::back_inserter(r.Pi));
    r.pi_size_bruteforce = static_cast<i64>(r.Pi.size());
    try {
        r.pi_size_closed_form = pi_size_closed_form(r.params);
    } catch (const std::domain_error&) {
        r.pi_size_closed_form.reset();
    }
    r.count = (BigInt(1) << static_cast<unsigned>(r.pi_size_bruteforce)) - 1;
    return r;
}

LcdReport pi_set(const FamilyParams& fp) { return pi_set(CosetPartition(fp)); }

BigInt pi_size_closed_form(const FamilyParams& fp) {
    const i64 q = fp.q, m = fp.m, lam = fp.lambda;
    const int v = v2(m);
    const i64 m0 = m >> v;
    const i64 pv = i64{1} << v;  // 2^v
    const i64 h = std::gcd<i64>(2, (q - 1) / lam);
    Frac f;
    auto tail = [&](bool include_one) {
        for (i64 t0 : divisors(m0))
            if (t0 > 1 || include_one) f.add((lam + 1) * inner(q, t0, pv), BigInt(4 * pv * t0));
    };
    if (q % 2 == 0) {
        f.add(lam + 1, 2);
        tail(true);
    } else if (h == 1 && m % 2 == 1) {  // (1.1)
        f.add(lam * (q + 2) + q + 3, 4);
        tail(false);
    } else if (h == 1) {  // (1.2)
        if (q % 4 == 1)
            f.add(3 * lam + 4, 4);
        else
            f.add(3 * (lam + 2), 4);
        f.add((lam + 1) * (bpow(q, static_cast<unsigned>(pv)) - 1), BigInt(4 * pv));
        tail(false);
    } else if (m % 2 == 1) {  // (2.1)
        f.add((lam + 1) * (q + 3), 4);
        tail(false);
    } else {  // (2.2)
        f.add(lam + 1, 1);
        f.add((lam + 1) * (bpow(q, static_cast<unsigned>(pv)) - 1), BigInt(4 * pv));
        tail(false);
    }
    return f.value();
}

std::optional<BigInt> pi_size_corollary(const FamilyParams& fp) {
    const i64 q = fp.q, m = fp.m;
    if (fp.lambda != q - 1 || m < 3 || !is_prime(m)) return std::nullopt;
    Frac f;
    if (q % 2 == 1) {
        f.add(BigInt((q + 1) * (q + 1)), 4);
        f.add(BigInt(q * q) * (bpow(q, static_cast<unsigned>(m - 1)) - 1), BigInt(4 * m));
    } else {
        f.add(BigInt(q * q) * (bpow(q, static_cast<unsigned>(m - 1)) + m - 1) + 2 * m * q, BigInt(4 * m));
    }
    return f.value();
}

BigInt lcd_count(const FamilyParams& fp) { return pi_set(fp).count; }

}  // namespace cyclo
