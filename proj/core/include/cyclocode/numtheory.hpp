#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cyclo {

using i64 = std::int64_t;
using i128 = __int128;
using BigInt = boost::multiprecision::cpp_int;

struct PrimePower {
    i64 p = 0;
    int e = 0;
    i64 q = 0;
};

bool is_prime(i64 p);

// Throws std::invalid_argument unless q = p^e with p prime, e >= 1.
PrimePower prime_power(i64 q);

int mobius(i64 k);

// Smallest t >= 1 with q^t = 1 (mod d); 1 for d = 1.
i64 mult_order(i64 q, i64 d);

int v2(i64 x);
int v2(const BigInt& x);

std::vector<i64> divisors(i64 k);
std::vector<i64> prime_factors(i64 k);

i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 b, i64 e, i64 m);
i64 inverse_mod(i64 a, i64 m);

// Checked integer power; throws std::overflow_error past 63 bits.
i64 ipow(i64 b, int e);
BigInt bpow(i64 b, unsigned e);

// The applicable 2-adic lifting-the-exponent clause for odd base >= 3.
bool lte_clause_holds(i64 base, i64 d);

i64 floor_div(i64 a, i64 b);
i64 ceil_div(i64 a, i64 b);

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace cyclo
