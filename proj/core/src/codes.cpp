#include "cyclocode/codes.hpp"

#include "cyclocode/leaders.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclo {

namespace {

i64 norm(i64 x, i64 n) {
    x %= n;
    return x < 0 ? x + n : x;
}

std::vector<char> bitmap(i64 n, const std::vector<i64>& T) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (i64 t : T) {
        if (t < 0 || t >= n) throw std::invalid_argument("defining set element out of range");
        in[t] = 1;
    }
    return in;
}

// Smallest-start maximal run of `in` meeting all of its cosets.
std::optional<std::pair<i64, i64>> bch_form_bitmap(const CosetPartition& part, const std::vector<char>& in,
                                                   std::vector<std::uint32_t>& stamp) {
    const i64 n = part.n();
    i64 count = 0, cosets = 0;
    stamp.assign(part.cosets().size(), 0);
    for (i64 x = 0; x < n; ++x) {
        if (!in[x]) continue;
        ++count;
        auto id = part.index_of(x);
        if (!stamp[id]) {
            stamp[id] = 1;
            ++cosets;
        }
    }
    if (count == 0) return std::nullopt;
    if (count == n) return std::pair<i64, i64>{0, n};
    std::fill(stamp.begin(), stamp.end(), 0);
    i64 s0 = 0;
    while (in[s0]) ++s0;
    std::optional<std::pair<i64, i64>> best;
    std::uint32_t run = 0;
    i64 i = 1;
    while (i < n) {
        i64 x = (s0 + i) % n;
        if (!in[x]) {
            ++i;
            continue;
        }
        ++run;
        i64 start = x, len = 0, seen = 0;
        while (in[(s0 + i) % n]) {
            auto id = part.index_of((s0 + i) % n);
            if (stamp[id] != run) {
                stamp[id] = run;
                ++seen;
            }
            ++len;
            ++i;
        }
        if (seen == cosets && (!best || start < best->first)) best = std::pair<i64, i64>{start, len + 1};
    }
    return best;
}

}  // namespace

std::vector<i64> bch_defining_set(const CosetPartition& part, i64 delta, i64 b) {
    const i64 n = part.n();
    if (delta < 2 || delta > n) throw std::invalid_argument("designed distance out of range [2, n]");
    std::vector<char> hit(part.cosets().size(), 0);
    for (i64 i = 0; i <= delta - 2; ++i) hit[part.index_of(norm(b + i, n))] = 1;
    std::vector<i64> T;
    for (std::size_t c = 0; c < hit.size(); ++c)
        if (hit[c]) T.insert(T.end(), part.cosets()[c].elements.begin(), part.cosets()[c].elements.end());
    std::sort(T.begin(), T.end());
    return T;
}

std::vector<i64> bch_defining_set(const BCHSpec& spec) {
    return bch_defining_set(CosetPartition(spec.params), spec.delta, spec.b);
}

CyclicCode code_from_defining_set(const CosetPartition& part, std::vector<i64> T, const FieldContext* ctx) {
    const i64 n = part.n();
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    auto in = bitmap(n, T);
    CyclicCode code;
    if (!part.params()) throw std::invalid_argument("code construction needs a family partition");
    code.params = *part.params();
    for (i64 t : T) {
        const Coset& c = part.coset_of(t);
        for (i64 y : c.elements)
            if (!in[y]) throw std::invalid_argument("defining set is not a union of cosets");
        if (c.leader == t) code.leaders.push_back(t);
    }
    code.dimension = n - static_cast<i64>(T.size());
    code.defining_set = std::move(T);
    if (ctx) {
        std::vector<Polynomial> fs;
        for (i64 l : code.leaders) fs.push_back(ctx->minimal_poly(l));
        code.generator = poly_product(ctx->base(), std::move(fs));
    }
    return code;
}

CyclicCode code_from_spec(const BCHSpec& spec, const CosetPartition& part, const FieldContext* ctx) {
    return code_from_defining_set(part, bch_defining_set(part, spec.delta, spec.b), ctx);
}

CyclicCode code_from_spec(const BCHSpec& spec) {
    CosetPartition part(spec.params);
    FieldContext ctx(spec.params);
    return code_from_spec(spec, part, &ctx);
}

i64 bose_distance(const CosetPartition& part, i64 delta, i64 b) {
    const i64 n = part.n();
    auto in = bitmap(n, bch_defining_set(part, delta, b));
    i64 d = delta;
    while (d - 1 < n && in[norm(b + d - 1, n)]) ++d;
    return std::min(d, n);
}

i64 bose_distance(const BCHSpec& spec) { return bose_distance(CosetPartition(spec.params), spec.delta, spec.b); }

i64 longest_run(i64 n, const std::vector<i64>& T) {
    auto in = bitmap(n, T);
    i64 s0 = 0;
    while (s0 < n && in[s0]) ++s0;
    if (s0 == n) return n;
    i64 best = 0, cur = 0;
    for (i64 i = 1; i <= n; ++i) {
        if (in[(s0 + i) % n]) {
            best = std::max(best, ++cur);
        } else {
            cur = 0;
        }
    }
    return best;
}

i64 dimension_delta_max(const FamilyParams& fp) {
    const i64 q = fp.q, m = fp.m, lam = fp.lambda;
    if (m < 2) throw std::domain_error("dimension formulas need m >= 2");
    if (m == 2) return lam * q + 1;
    if (m == 3) return 2 * lam * q + 1;
    if (m % 2 == 0) return lam * ipow(q, static_cast<int>(m / 2)) + 1;
    return lam * (ipow(q, static_cast<int>((m - 1) / 2)) + q) + 1;
}

i64 dimension_closed_form(const FamilyParams& fp, i64 delta, DimVariant variant) {
    const i64 hi = dimension_delta_max(fp);
    if (delta < 3 || delta > hi)
        throw std::domain_error("delta outside the closed-form range [3, " + std::to_string(hi) + "]");
    const i64 q = fp.q, m = fp.m, lam = fp.lambda;
    const i64 f = floor_div(delta - 2, q);
    if (m == 2) {
        const i64 base = lam * (q * q + 1);
        if (q % 2 == 0 || 2 * lam <= q - 1 || 2 * delta <= q * q + 3) return base + 7 - 4 * delta + 4 * f;
        return base + 9 - 4 * delta + (variant == DimVariant::printed ? -4 * f : 4 * f);
    }
    if (m == 3) {
        const i64 base = lam * (q * q * q + 1) - 6 * delta + 6 * f;
        if (lam < ceil_div(q, 2) || delta <= q * q - q + 2) return base + 11;
        return base + 15;
    }
    return lam * ipow(q, static_cast<int>(m)) + lam - 1 - 2 * m * (delta - 2 - f);
}

bool symmetric_hypotheses(const FamilyParams& fp, i64 delta) {
    const i64 q = fp.q, m = fp.m, lam = fp.lambda;
    if (m < 2 || delta % lam != 0 || delta < lam) return false;
    const i64 top = (m % 2 == 0) ? lam * ipow(q, static_cast<int>(m / 2)) - 1
                                 : lam * (ipow(q, static_cast<int>((m - 1) / 2)) + q) - 1;
    if (delta > top) return false;
    if (m == 2 && !(q % 2 == 0 || 2 * lam <= q - 1)) return false;
    if (m == 3 && lam > ceil_div(q, 2)) return false;
    return true;
}

i64 symmetric_dimension_formula(const FamilyParams& fp, i64 delta) {
    if (!symmetric_hypotheses(fp, delta)) throw std::domain_error("symmetric family hypotheses fail");
    const i64 q = fp.q, m = fp.m, lam = fp.lambda;
    const i64 inner = 2 * delta - delta / lam - floor_div(delta - 1, q) - floor_div(delta, q) +
                      floor_div(delta - 1, lam * q);
    return lam * ipow(q, static_cast<int>(m)) - 2 * m * inner + lam - 1;
}

SymmetricCode symmetric_bch_code(const FamilyParams& fp, i64 delta, const CosetPartition& part,
                                 const FieldContext* ctx) {
    if (delta < 1 || delta % fp.lambda != 0) throw std::invalid_argument("symmetric code needs lambda | delta");
    if (2 * delta + 1 > fp.n) throw std::invalid_argument("window 2 delta + 1 exceeds n");
    SymmetricCode s;
    s.code = code_from_spec(BCHSpec{fp, 2 * delta + 1, fp.n - delta + 1}, part, ctx);
    s.bound = 2 * (delta + 1);
    if (symmetric_hypotheses(fp, delta)) s.formula_dimension = symmetric_dimension_formula(fp, delta);
    auto in = bitmap(fp.n, s.code.defining_set);
    s.has_consecutive_run = true;
    for (i64 i = -delta; i <= delta; ++i) s.has_consecutive_run = s.has_consecutive_run && in[norm(i, fp.n)];

    std::ostringstream os, pair, single;
    bool fp_ = true, fs = true;
    for (i64 g = 1; g <= delta; ++g) {
        if (g % fp.q == 0) continue;
        if (g % fp.lambda != 0) {
            pair << (fp_ ? "" : ",") << g;
            fp_ = false;
        } else {
            single << (fs ? "" : ",") << g;
            fs = false;
        }
    }
    os << "(x-1)";
    if (!fp_) os << " * prod_{g in {" << pair.str() << "}} f_g f_-g";
    if (!fs) os << " * prod_{g in {" << single.str() << "}} f_g";
    s.factored_generator = os.str();
    return s;
}

SymmetricCode symmetric_bch_code(const FamilyParams& fp, i64 delta) {
    CosetPartition part(fp);
    FieldContext ctx(fp);
    return symmetric_bch_code(fp, delta, part, &ctx);
}

std::vector<i64> dual_defining_set(i64 n, const std::vector<i64>& T) {
    auto in = bitmap(n, T);
    std::vector<i64> out;
    for (i64 x = 0; x < n; ++x)
        if (!in[norm(-x, n)]) out.push_back(x);
    return out;
}

bool is_lcd(const GaloisField& F, const CyclicCode& code) {
    if (!code.generator) throw std::invalid_argument("is_lcd needs the generator polynomial");
    return is_self_reciprocal(F, *code.generator);
}

bool is_lcd_by_set(i64 n, const std::vector<i64>& T) {
    auto in = bitmap(n, T);
    for (i64 t : T)
        if (!in[norm(-t, n)]) return false;
    return true;
}

std::optional<std::pair<i64, i64>> is_bch_form(const CosetPartition& part, const std::vector<i64>& T) {
    auto in = bitmap(part.n(), T);
    for (i64 t : T)
        for (i64 y : part.coset_of(t).elements)
            if (!in[y]) throw std::invalid_argument("T is not a union of cosets");
    std::vector<std::uint32_t> stamp;
    return bch_form_bitmap(part, in, stamp);
}

bool dually_bch(const CosetPartition& part, i64 delta, Mode mode) {
    if (mode == Mode::closed_form) {
        if (!part.params()) throw std::domain_error("closed form needs family parameters");
        const FamilyParams& fp = *part.params();
        if (fp.m < 3 || fp.m % 2 == 0 || fp.lambda < 2)
            throw std::domain_error("closed form needs odd m >= 3 and lambda >= 2");
        ExtremalLeaders e = extremal_leaders(fp);
        if (delta < 3 || delta > e.delta1 + 1) throw std::domain_error("closed form needs 3 <= delta <= delta1 + 1");
        return *e.delta2 + 2 <= delta && delta <= e.delta1 + 1;
    }
    auto S = dual_defining_set(part.n(), bch_defining_set(part, delta, 0));
    if (S.empty()) return true;
    std::vector<std::uint32_t> stamp;
    return bch_form_bitmap(part, bitmap(part.n(), S), stamp).has_value();
}

std::vector<bool> dually_bch_sweep(const CosetPartition& part, i64 delta_max) {
    const i64 n = part.n();
    if (delta_max > n) throw std::invalid_argument("delta_max exceeds n");
    std::vector<bool> out;
    std::vector<char> tcos(part.cosets().size(), 0);
    std::vector<char> inS(static_cast<std::size_t>(n), 1);
    std::vector<std::uint32_t> stamp;
    i64 sizeS = n;
    bool verdict = true;
    for (i64 delta = 2; delta <= delta_max; ++delta) {
        auto id = part.index_of(delta - 2);
        if (!tcos[id] || delta == 2) {
            tcos[id] = 1;
            for (i64 y : part.cosets()[id].elements) {
                i64 neg = norm(-y, n);
                if (inS[neg]) {
                    inS[neg] = 0;
                    --sizeS;
                }
            }
            verdict = sizeS == 0 || bch_form_bitmap(part, inS, stamp).has_value();
        }
        out.push_back(verdict);
    }
    return out;
}

std::string to_string(DistanceStatus s) { return s == DistanceStatus::exact ? "exact" : "budget_exhausted"; }

}  // namespace cyclo
