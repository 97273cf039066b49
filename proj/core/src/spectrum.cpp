#include "cyclocode/spectrum.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclo {

namespace {

void fill_derived(SizeSpectrum& s, const FamilyParams& fp) {
    s.v = v2(fp.m);
    s.m0 = fp.m >> s.v;
    s.h = std::gcd<i64>(2, (fp.q - 1) / fp.lambda);
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (num % den != 0) throw std::domain_error("closed-form spectrum entry is not integral");
    return num / den;
}

// sum over eps | tau0 of mu(eps) q^(tau / (2 eps))
BigInt mobius_sum(i64 q, i64 tau, i64 tau0) {
    BigInt s = 0;
    for (i64 e : divisors(tau0)) {
        int mu = mobius(e);
        if (mu) s += mu * bpow(q, static_cast<unsigned>(tau / (2 * e)));
    }
    return s;
}

void put(SizeSpectrum& s, i64 tau, const BigInt& num, const BigInt& den) {
    BigInt v = exact_div(num, den);
    if (v != 0) s.entries[tau] += v;
}

}  // namespace

BigInt SizeSpectrum::weighted_total() const {
    BigInt t = 0;
    for (const auto& [tau, cnt] : entries) t += tau * cnt;
    return t;
}

bool operator==(const SizeSpectrum& a, const SizeSpectrum& b) { return a.entries == b.entries; }

std::set<i64> possible_sizes(i64 n, i64 q) {
    if (std::gcd(n, q) != 1) throw std::invalid_argument("gcd(n, q) != 1");
    std::set<i64> out;
    for (i64 d : divisors(n)) out.insert(mult_order(q, d));
    return out;
}

BigInt count_by_size_general(i64 n, i64 q, i64 tau) {
    if (tau < 1) throw std::invalid_argument("tau must be positive");
    if (std::gcd(n, q) != 1) throw std::invalid_argument("gcd(n, q) != 1");
    BigInt s = 0;
    for (i64 e : divisors(tau)) {
        int mu = mobius(e);
        if (!mu) continue;
        i64 r = powmod(q, tau / e, n);  // gcd(n, q^k - 1) = gcd(n, (q^k - 1) mod n)
        s += mu * std::gcd(n, (r - 1 + n) % n);
    }
    if (s % tau != 0) throw std::domain_error("Mobius sum not divisible by tau = " + std::to_string(tau));
    return s / tau;
}

SizeSpectrum spectrum_general(const FamilyParams& fp) {
    SizeSpectrum s;
    fill_derived(s, fp);
    for (i64 tau : possible_sizes(fp.n, fp.q)) {
        BigInt c = count_by_size_general(fp.n, fp.q, tau);
        if (c != 0) s.entries[tau] = c;
    }
    return s;
}

SizeSpectrum spectrum_closed_form(const FamilyParams& fp) {
    SizeSpectrum s;
    fill_derived(s, fp);
    const i64 q = fp.q, lam = fp.lambda, h = s.h;
    const i64 top = i64{1} << (s.v + 1);
    if (q % 2 == 1 && fp.m % 2 == 1) {
        put(s, 1, lam * h, 1);
        put(s, 2, lam * (q - h + 1), 2);
        for (i64 t0 : divisors(s.m0))
            if (t0 > 1) put(s, 2 * t0, lam * mobius_sum(q, 2 * t0, t0), 2 * t0);
    } else if (q % 2 == 1) {
        put(s, 1, lam * h, 1);
        put(s, 2, lam * (2 - h), 2);
        put(s, top, lam * (bpow(q, static_cast<unsigned>(top / 2)) - 1), top);
        for (i64 t0 : divisors(s.m0))
            if (t0 > 1) put(s, top * t0, lam * mobius_sum(q, top * t0, t0), top * t0);
    } else {
        put(s, 1, lam, 1);
        for (i64 t0 : divisors(s.m0)) put(s, top * t0, lam * mobius_sum(q, top * t0, t0), top * t0);
    }
    return s;
}

std::optional<SizeSpectrum> spectrum_corollary(const FamilyParams& fp) {
    const i64 q = fp.q;
    SizeSpectrum s;
    fill_derived(s, fp);
    const i64 top = i64{1} << (s.v + 1);
    if (fp.lambda == q - 1) {
        put(s, 1, q - 1, 1);
        if (q % 2 == 1 && fp.m % 2 == 1) {
            put(s, 2, q * (q - 1), 2);
            for (i64 t0 : divisors(s.m0))
                if (t0 > 1) put(s, 2 * t0, (q - 1) * mobius_sum(q, 2 * t0, t0), 2 * t0);
        } else if (q % 2 == 1) {
            put(s, 2, q - 1, 2);
            put(s, top, (q - 1) * (bpow(q, static_cast<unsigned>(top / 2)) - 1), top);
            for (i64 t0 : divisors(s.m0))
                if (t0 > 1) put(s, top * t0, (q - 1) * mobius_sum(q, top * t0, t0), top * t0);
        } else {
            for (i64 t0 : divisors(s.m0)) put(s, top * t0, (q - 1) * mobius_sum(q, top * t0, t0), top * t0);
        }
        return s;
    }
    if (fp.lambda == 1) {
        if (q % 2 == 1) {
            put(s, 1, 2, 1);
            put(s, top, bpow(q, static_cast<unsigned>(top / 2)) - 1, top);
            for (i64 t0 : divisors(s.m0))
                if (t0 > 1) put(s, top * t0, mobius_sum(q, top * t0, t0), top * t0);
        } else {
            put(s, 1, 1, 1);
            for (i64 t0 : divisors(s.m0)) put(s, top * t0, mobius_sum(q, top * t0, t0), top * t0);
        }
        return s;
    }
    return std::nullopt;
}

SizeSpectrum spectrum_oracle(const CosetPartition& part) {
    SizeSpectrum s;
    if (part.params()) fill_derived(s, *part.params());
    for (const auto& c : part.cosets()) s.entries[c.size] += 1;
    return s;
}

}  // namespace cyclo
