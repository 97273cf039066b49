#include "cyclocode/leaders.hpp"

#include <stdexcept>

namespace cyclo {

namespace {

// exact comparisons of an integer against num/den, den > 0
bool lt(i128 x, i128 num, i128 den) { return x * den < num; }
bool le(i128 x, i128 num, i128 den) { return x * den <= num; }
bool gt(i128 x, i128 num, i128 den) { return x * den > num; }
bool ge(i128 x, i128 num, i128 den) { return x * den >= num; }

i128 mod(i128 x, i128 m) {
    i128 r = x % m;
    return r < 0 ? r + m : r;
}

struct Ctx {
    i128 lam, a, M, Q, P, x;
    i64 t;
    i64 a_lo;
};

std::optional<ExclusionFamily> hit(FamilyId f, const Ctx& c, i128 A, i128 B) {
    return ExclusionFamily{f, c.t, static_cast<i64>(A), static_cast<i64>(B), static_cast<i64>(c.a),
                           static_cast<i64>(c.x)};
}

std::optional<ExclusionFamily> check_e1(const Ctx& c) {
    i128 diff = c.a * c.Q - c.x;
    if (mod(diff, c.lam) != 0) return std::nullopt;
    i128 A = diff / c.lam;
    if (A >= c.a_lo && lt(A, c.a * (c.Q - 1), c.lam * (c.P + 1))) return hit(FamilyId::E1, c, A, 0);
    return std::nullopt;
}

// x = Q(B lambda + a) - A lambda
std::optional<ExclusionFamily> check_e2(const Ctx& c) {
    const i128 lam = c.lam, a = c.a, M = c.M, Q = c.Q, P = c.P;
    i128 A = mod(-c.x * inverse_mod(static_cast<i64>(mod(lam, Q)), static_cast<i64>(Q)), Q);
    for (; A < (lam + a) * Q; A += Q) {
        i128 r = (c.x + A * lam) / Q - a;
        if (mod(r, lam) != 0) continue;
        i128 B = (r - mod(r, lam)) / lam;
        i128 lo21 = A * lam * (P + 1) - a * (Q - 1), d21 = lam * (Q - 1);
        i128 up_a = a * M + 2 * A * lam - 2 * a * Q;
        i128 up_la = (lam + a) * M + 2 * A * lam - 2 * a * Q;
        if (A >= c.a_lo && lt(A, a * (Q - 1), 2 * lam) && gt(B, lo21, d21) && le(B, up_a, 2 * lam * Q))
            return hit(FamilyId::E2_1, c, A, B);
        if (A >= c.a_lo && le(A, a * (Q - 1), lam) && gt(B, a * M + A * lam - a * Q, lam * Q) &&
            le(B, up_la, 2 * lam * Q))
            return hit(FamilyId::E2_2, c, A, B);
        if (gt(A, a * (Q - 1), lam) && lt(A, (lam + a) * (Q - 1), 2 * lam) && gt(B, lo21, d21) &&
            le(B, up_la, 2 * lam * Q))
            return hit(FamilyId::E2_3, c, A, B);
    }
    return std::nullopt;
}

// x = (lambda + a) M - Q(B lambda + a) + A lambda
std::optional<ExclusionFamily> check_e3(const Ctx& c) {
    const i128 lam = c.lam, a = c.a, M = c.M, Q = c.Q, P = c.P;
    i128 A = mod((c.x - (lam + a) * M) * inverse_mod(static_cast<i64>(mod(lam, Q)), static_cast<i64>(Q)), Q);
    for (; A < (lam + a) * Q; A += Q) {
        i128 v = (lam + a) * M + A * lam - c.x;
        i128 r = v / Q - a;
        if (mod(r, lam) != 0) continue;
        i128 B = (r - mod(r, lam)) / lam;
        i128 lo = (lam + a) * M + 2 * A * lam - 2 * a * Q;
        if (A >= 0 && lt(A, a * Q - lam, lam) && gt(B, lo, 2 * lam * Q) && lt(B, A * lam + lam * M - a * Q, lam * Q))
            return hit(FamilyId::E3_1, c, A, B);
        if (ge(A, a * Q - lam, lam) && lt(A, (lam + a) * (Q - 1), 2 * lam) && gt(B, lo, 2 * lam * Q) &&
            lt(B, (lam + a) * M - a * (Q + 1) - A * lam * (P - 1), lam * (Q + 1)))
            return hit(FamilyId::E3_2, c, A, B);
    }
    return std::nullopt;
}

// x = a M - Q(B lambda + a) + A lambda
std::optional<ExclusionFamily> check_case22(const Ctx& c) {
    const i128 lam = c.lam, a = c.a, M = c.M, Q = c.Q, P = c.P;
    i128 A = mod((c.x - a * M) * inverse_mod(static_cast<i64>(mod(lam, Q)), static_cast<i64>(Q)), Q);
    for (; lt(A, a * (Q - 1), 2 * lam); A += Q) {
        i128 v = a * M + A * lam - c.x;
        i128 r = v / Q - a;
        if (mod(r, lam) != 0) continue;
        i128 B = (r - mod(r, lam)) / lam;
        if (gt(B, a * M + 2 * A * lam - 2 * a * Q, 2 * lam * Q) && lt(B, (P - 1) * (a * Q - A * lam), lam * (Q + 1)))
            return hit(FamilyId::CASE2_2, c, A, B);
    }
    return std::nullopt;
}

}  // namespace

std::string to_string(FamilyId f) {
    switch (f) {
        case FamilyId::E1: return "E1";
        case FamilyId::E2_1: return "E2_1";
        case FamilyId::E2_2: return "E2_2";
        case FamilyId::E2_3: return "E2_3";
        case FamilyId::E3_1: return "E3_1";
        case FamilyId::E3_2: return "E3_2";
        case FamilyId::CASE2_2: return "CASE2_2";
    }
    return "?";
}

std::string to_string(EVariant v) { return v == EVariant::proof ? "proof" : "statement"; }

EVariant parse_variant(const std::string& s) {
    if (s == "proof") return EVariant::proof;
    if (s == "statement") return EVariant::statement;
    throw std::invalid_argument("unknown variant: " + s);
}

bool in_condition_one(const FamilyParams& fp, i64 gamma) {
    if (gamma < 0 || gamma >= fp.n) throw std::invalid_argument("gamma out of range");
    i128 a = residue_a(fp, gamma), x = gamma;
    i128 aM = a * fp.M, laM = (fp.lambda + a) * static_cast<i128>(fp.M);
    return 2 * x <= aM || (aM < x && 2 * x <= laM);
}

std::optional<ExclusionFamily> is_excluded(const FamilyParams& fp, i64 gamma, EVariant variant) {
    if (gamma < 0 || gamma >= fp.n) throw std::invalid_argument("gamma out of range");
    const bool proof = variant == EVariant::proof;
    for (i64 t = 1; t <= fp.m - 1; ++t) {
        Ctx c{fp.lambda, residue_a(fp, gamma), fp.M, ipow(fp.q, static_cast<int>(fp.m - t)),
              ipow(fp.q, static_cast<int>(t)), gamma, t, proof ? 0 : 1};
        if (auto w = check_e1(c)) return w;
        if (auto w = check_e2(c)) return w;
        if (auto w = check_e3(c)) return w;
        if (proof)
            if (auto w = check_case22(c)) return w;
    }
    return std::nullopt;
}

LeaderVerdict is_leader_closed_form(const FamilyParams& fp, i64 gamma, EVariant variant) {
    LeaderVerdict v;
    v.gamma = gamma;
    if (!in_condition_one(fp, gamma)) {
        v.reason = LeaderReason::range_violation;
        return v;
    }
    v.witness = is_excluded(fp, gamma, variant);
    v.is_leader = !v.witness;
    v.reason = v.witness ? LeaderReason::excluded : LeaderReason::leader;
    return v;
}

GuaranteedRange guaranteed_leader_range(const FamilyParams& fp) {
    const i64 q = fp.q, m = fp.m, lam = fp.lambda;
    GuaranteedRange g;
    g.size = 2 * m;
    if (m == 1) throw std::domain_error("guaranteed leader range needs m >= 2");
    if (m == 2) {
        g.gamma_max = lam * q - 1;
        if (q % 2 == 1 && 2 * lam >= q + 1) g.exceptions.push_back({(q * q + 1) / 2, 2});
    } else if (m == 3) {
        g.gamma_max = 2 * lam * q - 1;
        if (lam >= ceil_div(q, 2)) g.exceptions.push_back({q * q - q + 1, 2});
    } else if (m % 2 == 0) {
        g.gamma_max = lam * ipow(q, static_cast<int>(m / 2)) - 1;
    } else {
        g.gamma_max = lam * (ipow(q, static_cast<int>((m - 1) / 2)) + q) - 1;
    }
    return g;
}

ExtremalLeaders extremal_leaders(const FamilyParams& fp) {
    if (fp.m % 2 == 0) throw std::domain_error("extremal leaders need odd m");
    const i128 q = fp.q, lam = fp.lambda, M = fp.M;
    ExtremalLeaders e;
    auto exact = [](i128 num, i128 den) {
        if (num % den != 0) throw std::logic_error("extremal leader formula not integral");
        return static_cast<i64>(num / den);
    };
    if (((fp.q - 1) / fp.lambda) % 2 == 1) {
        e.delta1 = exact(M * (2 * lam * q + lam - q - 1), 2 * (q + 1));
        e.delta1_coset_size = 2;
        if (fp.m >= 3) {
            e.delta2 = e.delta1 - exact(lam * q * (ipow(fp.q, static_cast<int>(fp.m - 2)) + 1), q + 1);
            e.delta2_coset_size = 2 * fp.m;
        }
    } else {
        e.delta1 = exact((2 * lam - 1) * M, 2);
        e.delta1_coset_size = 1;
        if (fp.m >= 3) {
            e.delta2 = e.delta1 - exact(lam * M, q + 1);
            e.delta2_coset_size = 2;
        }
    }
    return e;
}

std::pair<i64, i64> proposition_range_nonleaders(i64 q, i64 m) {
    if (m % 2 == 0 || m < 1) throw std::domain_error("proposition needs odd m");
    prime_power(q);
    i128 M = static_cast<i128>(ipow(q, static_cast<int>(m))) + 1;
    i128 num = M * (static_cast<i128>(q) * q - 2 * q - 1);
    if (num % (q + 1) != 0) throw std::logic_error("proposition bound not integral");
    return {static_cast<i64>(num / (q + 1)), static_cast<i64>((q - 2) * M)};
}

}  // namespace cyclo
