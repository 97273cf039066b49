#include "cyclocode/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclo {

bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimePower prime_power(i64 q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    i64 p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int e = 0;
    i64 r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return {p, e, q};
}

int mobius(i64 k) {
    if (k < 1) throw std::invalid_argument("mobius: k must be positive");
    int r = 1;
    for (i64 p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        k /= p;
        if (k % p == 0) return 0;
        r = -r;
    }
    if (k > 1) r = -r;
    return r;
}

std::vector<i64> prime_factors(i64 k) {
    std::vector<i64> out;
    for (i64 p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        out.push_back(p);
        while (k % p == 0) k /= p;
    }
    if (k > 1) out.push_back(k);
    return out;
}

std::vector<i64> divisors(i64 k) {
    if (k < 1) throw std::invalid_argument("divisors: k must be positive");
    std::vector<i64> lo, hi;
    for (i64 d = 1; d * d <= k; ++d) {
        if (k % d) continue;
        lo.push_back(d);
        if (d != k / d) hi.push_back(k / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

i64 mulmod(i64 a, i64 b, i64 m) { return static_cast<i64>(static_cast<i128>(a) * b % m); }

i64 powmod(i64 b, i64 e, i64 m) {
    if (m == 1) return 0;
    i64 r = 1;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

i64 inverse_mod(i64 a, i64 m) {
    i64 r0 = ((a % m) + m) % m, r1 = m, s0 = 1, s1 = 0;
    while (r1) {
        i64 t = r0 / r1;
        r0 -= t * r1;
        std::swap(r0, r1);
        s0 -= t * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw std::invalid_argument("inverse_mod: not invertible");
    return ((s0 % m) + m) % m;
}

i64 mult_order(i64 q, i64 d) {
    if (d < 1) throw std::invalid_argument("mult_order: modulus must be positive");
    if (d == 1) return 1;
    if (std::gcd(q, d) != 1) throw std::invalid_argument("mult_order: gcd(q, d) != 1");
    // phi(d), then strip prime factors while the power stays 1
    i64 phi = d;
    for (i64 p : prime_factors(d)) phi = phi / p * (p - 1);
    i64 t = phi;
    for (i64 p : prime_factors(phi))
        while (t % p == 0 && powmod(q, t / p, d) == 1) t /= p;
    return t;
}

int v2(i64 x) {
    if (x == 0) throw std::invalid_argument("v2: zero");
    int k = 0;
    while ((x & 1) == 0) {
        x >>= 1;
        ++k;
    }
    return k;
}

int v2(const BigInt& x) {
    if (x == 0) throw std::invalid_argument("v2: zero");
    return static_cast<int>(boost::multiprecision::lsb(boost::multiprecision::abs(x)));
}

i64 ipow(i64 b, int e) {
    i128 r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
        if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("ipow: overflow");
    }
    return static_cast<i64>(r);
}

BigInt bpow(i64 b, unsigned e) { return boost::multiprecision::pow(BigInt(b), e); }

bool lte_clause_holds(i64 base, i64 d) {
    if (base < 3 || base % 2 == 0 || d < 1) throw std::invalid_argument("lte: needs odd base >= 3 and d >= 1");
    BigInt pw = bpow(base, static_cast<unsigned>(d));
    int minus = v2(pw - 1), plus = v2(pw + 1);
    if (base % 4 == 1) return minus == v2(base - 1) + v2(d) && plus == 1;
    if (d % 2 == 1) return minus == 1 && plus == v2(base + 1);
    return minus == v2(base + 1) + v2(d) && plus == 1;
}

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

}  // namespace cyclo
