#include "cyclocode/harness.hpp"

#include "cyclocode/codes.hpp"
#include "cyclocode/fieldpoly.hpp"
#include "cyclocode/lcd.hpp"
#include "cyclocode/leaders.hpp"
#include "cyclocode/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cyclo {

namespace {

template <class C>
std::string braces(const C& xs) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& x : xs) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string str(const SizeSpectrum& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [tau, c] : s.entries) {
        os << (first ? "" : ",") << tau << ':' << c;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string str(const std::optional<i64>& x) { return x ? std::to_string(*x) : "absent"; }

i64 norm(i64 x, i64 n) {
    x %= n;
    return x < 0 ? x + n : x;
}

struct Sink {
    GridPoint point;
    std::string check;
    Report* out;

    void eval(std::int64_t k = 1) { out->evaluations[check] += k; }
    void emit(std::string expected, std::string actual, std::map<std::string, std::string> witness, Severity sev) {
        out->findings.push_back({point, check, std::move(expected), std::move(actual), std::move(witness), sev});
    }
    // Records one comparison; emits a finding when it fails.
    bool expect(bool ok, const std::string& expected, const std::string& actual,
                std::map<std::string, std::string> witness, Severity sev = Severity::theorem_mismatch) {
        eval();
        if (!ok) emit(expected, actual, std::move(witness), sev);
        return ok;
    }
};

std::map<std::string, std::string> gam(i64 g) { return {{"gamma", std::to_string(g)}}; }
std::map<std::string, std::string> del(i64 d) { return {{"delta", std::to_string(d)}}; }

// Lazily built per-point state shared by all checks of one point.
class PointCtx {
public:
    explicit PointCtx(const FamilyParams& fp, const HarnessConfig& cfg) : fp(fp), cfg(cfg), part(fp) {}

    const FieldContext& field() {
        if (!ctx_) ctx_.emplace(fp);
        return *ctx_;
    }
    const std::vector<Factor>& factors() {
        if (!factors_) factors_ = factor_xn_minus_1(field(), part);
        return *factors_;
    }
    std::mt19937_64 rng(const std::string& check) const {
        std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(fp.q), static_cast<std::uint64_t>(fp.m),
                          static_cast<std::uint64_t>(fp.lambda), std::hash<std::string>{}(check)};
        return std::mt19937_64(seq);
    }

    FamilyParams fp;
    HarnessConfig cfg;
    CosetPartition part;

private:
    std::optional<FieldContext> ctx_;
    std::optional<std::vector<Factor>> factors_;
};

using PointFn = std::function<void(PointCtx&, Sink&)>;
using GlobalFn = std::function<void(Sink&)>;

struct CheckDef {
    std::string name;
    std::string suite;
    PointFn point;
    GlobalFn global;
};

// ---------------------------------------------------------------- numtheory

void mobius_sum(Sink& s) {
    for (i64 k = 1; k <= 5000; ++k) {
        i64 sum = 0;
        for (i64 d : divisors(k)) sum += mobius(d);
        s.expect(sum == (k == 1 ? 1 : 0), k == 1 ? "1" : "0", std::to_string(sum), {{"k", std::to_string(k)}});
    }
}

void lte(Sink& s) {
    for (i64 b = 3; b <= 99; b += 2)
        for (i64 d = 1; d <= 12; ++d)
            s.expect(lte_clause_holds(b, d), "clause holds", "clause fails",
                     {{"base", std::to_string(b)}, {"d", std::to_string(d)}});
}

void order_divisibility(PointCtx& c, Sink& s) {
    const i64 n = c.fp.n, q = c.fp.q;
    const i64 top = mult_order(q, n);
    s.expect(top == 2 * c.fp.m, std::to_string(2 * c.fp.m), std::to_string(top), {{"d", std::to_string(n)}});
    for (i64 d : divisors(n)) {
        const i64 o = mult_order(q, d);
        s.expect(top % o == 0, "ord_d divides ord_n", std::to_string(o) + " does not divide " + std::to_string(top),
                 {{"d", std::to_string(d)}});
        for (i64 e : divisors(d)) {
            const i64 oe = mult_order(q, e);
            s.expect(o % oe == 0, "ord_e divides ord_d", std::to_string(oe) + " does not divide " + std::to_string(o),
                     {{"d", std::to_string(d)}, {"e", std::to_string(e)}});
        }
    }
}

// ------------------------------------------------------------------ cosets

void partition_check(PointCtx& c, Sink& s) {
    const i64 n = c.fp.n, lam = c.fp.lambda;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    i64 total = 0;
    for (const auto& co : c.part.cosets()) {
        total += co.size;
        s.expect(co.size == 1 || co.size % 2 == 0, "size 1 or even", std::to_string(co.size), gam(co.leader));
        s.expect(co.size == static_cast<i64>(co.elements.size()), std::to_string(co.size),
                 std::to_string(co.elements.size()), gam(co.leader));
        i64 lo = n;
        for (i64 x : co.elements) {
            s.expect(!seen[x], "disjoint", std::to_string(x) + " repeated", gam(co.leader));
            seen[x] = 1;
            lo = std::min(lo, x);
            s.expect(x % lam == co.leader % lam, std::to_string(co.leader % lam), std::to_string(x % lam),
                     {{"gamma", std::to_string(co.leader)}, {"element", std::to_string(x)}});
        }
        s.expect(lo == co.leader, std::to_string(lo), std::to_string(co.leader), gam(co.leader));
    }
    s.expect(total == n, std::to_string(n), std::to_string(total), {});
}

void reflection_check(PointCtx& c, Sink& s) {
    for (i64 g = 0; g < c.fp.n; ++g) {
        const i64 r = reflect(c.fp, g);
        s.expect(r >= 0 && r < c.fp.n && c.part.same_coset(g, r), "in C_gamma", std::to_string(r), gam(g));
    }
}

void fold_check(PointCtx& c, Sink& s) {
    for (i64 g = 0; g < c.fp.n; ++g) {
        const i64 tau = c.part.coset_of(g).size;
        i64 lo = c.fp.n;
        bool inside = true;
        for (i64 t = 0; t < tau; ++t) {
            const i64 x = fold(c.fp, g, t);
            inside = inside && x >= 0 && x < c.fp.n && c.part.same_coset(g, x);
            lo = std::min(lo, x);
        }
        s.expect(inside, "every fold in C_gamma", "fold leaves C_gamma", gam(g));
        s.expect(lo == c.part.leader_of(g), std::to_string(c.part.leader_of(g)), std::to_string(lo), gam(g));
    }
}

void half_period_check(PointCtx& c, Sink& s) {
    i64 bad = 0, first = -1;
    for (i64 g = 0; g < c.fp.n; ++g) {
        s.eval();
        if (!half_period_fold_holds(c.fp, g)) {
            if (first < 0) first = g;
            ++bad;
        }
    }
    if (bad)
        s.emit("half-period minimum equals the leader for every gamma",
               "fails for " + std::to_string(bad) + " residues", gam(first), Severity::info);
}

void negation_check(PointCtx& c, Sink& s) {
    for (i64 g = 0; g < c.fp.n; ++g) {
        const bool brute = negation_in_same_coset(c.part, g);
        const bool closed = negation_in_same_coset(c.fp, g, Mode::closed_form);
        s.expect(brute == closed, brute ? "true" : "false", closed ? "true" : "false", gam(g));
    }
}

// ----------------------------------------------------------------- leaders

void proof_equivalence(PointCtx& c, Sink& s) {
    for (i64 g = 0; g < c.fp.n; ++g) {
        const bool oracle = c.part.leader_of(g) == g;
        const LeaderVerdict v = is_leader_closed_form(c.fp, g, EVariant::proof);
        auto w = gam(g);
        if (v.witness) w["family"] = to_string(v.witness->family_id);
        s.expect(v.is_leader == oracle, oracle ? "leader" : "not a leader", v.is_leader ? "leader" : "not a leader",
                 std::move(w));
    }
}

void statement_gap(PointCtx& c, Sink& s) {
    for (i64 g = 0; g < c.fp.n; ++g) {
        const bool oracle = c.part.leader_of(g) == g;
        const LeaderVerdict v = is_leader_closed_form(c.fp, g, EVariant::statement);
        auto w = gam(g);
        if (const auto p = is_excluded(c.fp, g, EVariant::proof)) w["family"] = to_string(p->family_id);
        s.expect(v.is_leader == oracle, oracle ? "leader" : "not a leader", v.is_leader ? "leader" : "not a leader",
                 std::move(w), Severity::paper_variant_gap);
    }
}

void guaranteed_range_check(PointCtx& c, Sink& s) {
    if (c.fp.m < 2) return;
    const GuaranteedRange r = guaranteed_leader_range(c.fp);
    for (i64 g = 1; g <= r.gamma_max && g < c.fp.n; ++g) {
        if (g % c.fp.q == 0) continue;
        i64 size = r.size;
        for (const auto& [eg, es] : r.exceptions)
            if (eg == g) size = es;
        const bool leader = c.part.leader_of(g) == g;
        const i64 got = c.part.coset_of(g).size;
        s.expect(leader && got == size, "leader of size " + std::to_string(size),
                 leader ? "leader of size " + std::to_string(got)
                        : "not a leader (leader " + std::to_string(c.part.leader_of(g)) + ")",
                 gam(g));
    }
}

// ---------------------------------------------------------------- extremal

void extremal_check(PointCtx& c, Sink& s, bool second) {
    if (c.fp.m % 2 == 0) return;
    const ExtremalLeaders e = extremal_leaders(c.fp);
    const auto& cs = c.part.cosets();
    const std::size_t idx = second ? 2 : 1;
    if (cs.size() < idx) return;
    const Coset& top = cs[cs.size() - idx];
    std::optional<i64> d = second ? e.delta2 : std::optional<i64>(e.delta1);
    std::optional<i64> sz = second ? e.delta2_coset_size : std::optional<i64>(e.delta1_coset_size);
    if (!d) return;
    const std::string exp = std::to_string(*d) + " (size " + str(sz) + ")";
    const std::string act = std::to_string(top.leader) + " (size " + std::to_string(top.size) + ")";
    s.expect(top.leader == *d && top.size == *sz, exp, act, {});
}

void delta1_residue_check(PointCtx& c, Sink& s) {
    const i64 lam = c.fp.lambda;
    const i64 d1 = c.part.cosets().back().leader;
    s.expect(d1 % lam == norm(lam - 1, lam), std::to_string(norm(lam - 1, lam)) + " mod lambda",
             std::to_string(d1 % lam) + " mod lambda", {{"delta1", std::to_string(d1)}});
    const i64 g = (lam - 1) * c.fp.M + 1;
    if (g >= c.fp.n) return;
    const bool leader = c.part.leader_of(g) == g;
    const i64 sz = c.part.coset_of(g).size;
    s.expect(leader && sz == 2 * c.fp.m, "leader of size " + std::to_string(2 * c.fp.m),
             leader ? "leader of size " + std::to_string(sz) : "not a leader", gam(g));
}

void proposition_check(PointCtx& c, Sink& s) {
    if (c.fp.lambda != c.fp.q - 1 || c.fp.m % 2 == 0) return;
    const auto [lo, hi] = proposition_range_nonleaders(c.fp.q, c.fp.m);
    for (i64 l : c.part.leaders())
        if (l > lo && l < hi)
            s.expect(false, "no leader in (" + std::to_string(lo) + ", " + std::to_string(hi) + ")",
                     std::to_string(l), gam(l));
    s.eval();
}

// ---------------------------------------------------------------- spectrum

void three_way(PointCtx& c, Sink& s) {
    const SizeSpectrum oracle = spectrum_oracle(c.part);
    const SizeSpectrum general = spectrum_general(c.fp);
    const SizeSpectrum closed = spectrum_closed_form(c.fp);
    s.expect(oracle == general, str(oracle), str(general), {{"source", "general"}});
    s.expect(oracle == closed, str(oracle), str(closed), {{"source", "closed_form"}});
    s.expect(general == closed, str(general), str(closed), {{"source", "general_vs_closed_form"}});
}

void spectrum_total(PointCtx& c, Sink& s) {
    const BigInt t = spectrum_closed_form(c.fp).weighted_total();
    s.expect(t == c.fp.n, std::to_string(c.fp.n), to_decimal(t), {});
}

void spectrum_corollary_check(PointCtx& c, Sink& s) {
    const auto cor = spectrum_corollary(c.fp);
    if (!cor) return;
    const SizeSpectrum oracle = spectrum_oracle(c.part);
    s.expect(*cor == oracle, str(oracle), str(*cor), {});
}

// --------------------------------------------------------------- dimension

// |C_0 u ... u C_{delta-2}| for delta = 2 .. hi, index delta.
std::vector<i64> bch_sizes(const CosetPartition& part, i64 hi) {
    std::vector<i64> out(static_cast<std::size_t>(hi) + 1, 0);
    std::vector<char> hit(part.cosets().size(), 0);
    i64 sz = 0;
    for (i64 d = 2; d <= hi; ++d) {
        const auto id = part.index_of(d - 2);
        if (!hit[id]) {
            hit[id] = 1;
            sz += part.cosets()[id].size;
        }
        out[d] = sz;
    }
    return out;
}

void dimension_check(PointCtx& c, Sink& s) {
    if (c.fp.m < 2) return;
    const i64 hi = std::min(dimension_delta_max(c.fp), c.fp.n);
    const auto sizes = bch_sizes(c.part, hi);
    for (i64 d = 3; d <= hi; ++d) {
        const i64 oracle = c.fp.n - sizes[d];
        const i64 f = dimension_closed_form(c.fp, d, DimVariant::corrected);
        s.expect(f == oracle, std::to_string(oracle), std::to_string(f), del(d));
    }
}

void dimension_printed(PointCtx& c, Sink& s) {
    if (c.fp.m < 2) return;
    const i64 hi = std::min(dimension_delta_max(c.fp), c.fp.n);
    const auto sizes = bch_sizes(c.part, hi);
    for (i64 d = 3; d <= hi; ++d) {
        const i64 oracle = c.fp.n - sizes[d];
        const i64 f = dimension_closed_form(c.fp, d, DimVariant::printed);
        s.expect(f == oracle, std::to_string(oracle), std::to_string(f), del(d), Severity::paper_variant_gap);
    }
}

// Sizes of the cosets through -delta + 1 .. delta, plus whether -delta is covered.
template <class F>
void symmetric_walk(PointCtx& c, F&& visit) {
    const i64 n = c.fp.n;
    std::vector<char> hit(c.part.cosets().size(), 0);
    i64 sz = 0;
    auto add = [&](i64 x) {
        const auto id = c.part.index_of(norm(x, n));
        if (!hit[id]) {
            hit[id] = 1;
            sz += c.part.cosets()[id].size;
        }
    };
    add(0);
    for (i64 d = 1; 2 * d + 1 <= n; ++d) {
        add(d);
        add(-d + 1);
        if (d % c.fp.lambda == 0 && symmetric_hypotheses(c.fp, d))
            visit(d, sz, hit[c.part.index_of(norm(-d, n))] != 0);
    }
}

void symmetric_check(PointCtx& c, Sink& s) {
    if (c.fp.m < 2) return;
    symmetric_walk(c, [&](i64 d, i64 sz, bool) {
        const i64 f = symmetric_dimension_formula(c.fp, d);
        s.expect(f == c.fp.n - sz, std::to_string(c.fp.n - sz), std::to_string(f), del(d));
    });
}

void symmetric_run_check(PointCtx& c, Sink& s) {
    if (c.fp.m < 2) return;
    symmetric_walk(c, [&](i64 d, i64, bool covered) {
        s.expect(covered, "-delta in the defining set", "-delta missing", del(d));
    });
}

// --------------------------------------------------------------- dually-BCH

void dually_check(PointCtx& c, Sink& s) {
    if (c.fp.m < 3 || c.fp.m % 2 == 0 || c.fp.lambda < 2) return;
    const ExtremalLeaders e = extremal_leaders(c.fp);
    const i64 hi = std::min(e.delta1 + 1, c.fp.n);
    const auto sweep = dually_bch_sweep(c.part, hi);
    for (i64 d = 3; d <= hi; ++d) {
        const bool brute = sweep[static_cast<std::size_t>(d - 2)];
        const bool closed = dually_bch(c.part, d, Mode::closed_form);
        s.expect(brute == closed, brute ? "dually-BCH" : "not dually-BCH", closed ? "dually-BCH" : "not dually-BCH",
                 del(d));
    }
}

// --------------------------------------------------------------------- lcd

void pi_check(PointCtx& c, Sink& s) {
    const LcdReport r = pi_set(c.part);
    std::string closed = "non-integer";
    if (r.pi_size_closed_form) closed = to_decimal(*r.pi_size_closed_form);
    const bool ok = r.pi_size_closed_form && *r.pi_size_closed_form == r.pi_size_bruteforce;
    s.expect(ok, std::to_string(r.pi_size_bruteforce), closed, {{"Gamma", braces(r.Gamma)}, {"Pi", braces(r.Pi)}});
}

void lcd_corollary_check(PointCtx& c, Sink& s) {
    const auto cor = pi_size_corollary(c.fp);
    if (!cor) return;
    const LcdReport r = pi_set(c.part);
    s.expect(*cor == r.pi_size_bruteforce, std::to_string(r.pi_size_bruteforce), to_decimal(*cor), {});
}

void lcd_sampled(PointCtx& c, Sink& s) {
    const LcdReport r = pi_set(c.part);
    if (r.Pi.empty()) return;
    auto rng = c.rng(s.check);
    const i64 n = c.fp.n;
    for (int i = 0; i < c.cfg.lcd_samples; ++i) {
        const std::size_t k = 1 + rng() % std::min<std::size_t>(r.Pi.size(), 3);
        std::vector<i64> pick;
        std::sample(r.Pi.begin(), r.Pi.end(), std::back_inserter(pick), static_cast<std::ptrdiff_t>(k), rng);
        std::vector<i64> T;
        for (i64 g : pick)
            for (i64 root : {g, norm(-g, n)}) {
                const auto& el = c.part.coset_of(root).elements;
                T.insert(T.end(), el.begin(), el.end());
            }
        const CyclicCode code = code_from_defining_set(c.part, T, &c.field());
        const bool lcd = is_lcd(c.field().base(), code) && is_lcd_by_set(n, code.defining_set);
        s.expect(lcd, "LCD", "not LCD", {{"subset", braces(pick)}});
    }
}

// -------------------------------------------------------------------- poly

void product_check(PointCtx& c, Sink& s) {
    std::vector<Polynomial> fs;
    for (const auto& f : c.factors()) fs.push_back(f.poly);
    const Polynomial prod = poly_product(c.field().base(), std::move(fs));
    const Polynomial want = xn_minus_1(c.field().base(), c.fp.n);
    s.expect(prod == want, "x^n - 1", prod == want ? "x^n - 1" : "degree " + std::to_string(prod.degree()), {});
}

void self_reciprocal_check(PointCtx& c, Sink& s) {
    const GaloisField& F = c.field().base();
    for (const auto& f : c.factors()) {
        const bool sr = is_self_reciprocal(F, f.poly);
        const bool neg = negation_in_same_coset(c.part, f.leader);
        s.expect(sr == neg, neg ? "self-reciprocal" : "not self-reciprocal",
                 sr ? "self-reciprocal" : "not self-reciprocal", gam(f.leader));
    }
}

void reciprocal_check(PointCtx& c, Sink& s) {
    const GaloisField& F = c.field().base();
    for (const auto& f : c.factors()) {
        const Polynomial r = reciprocal(F, f.poly);
        const Polynomial rr = reciprocal(F, r);
        s.expect(rr == f.poly && r.degree() == f.poly.degree(), "(f*)* = f, deg f* = deg f", "differs",
                 gam(f.leader));
    }
}

void subfield_check(PointCtx& c, Sink& s) {
    const FieldContext& ctx = c.field();
    for (const auto& co : c.part.cosets()) {
        bool ok = true;
        for (const auto& e : ctx.minimal_poly_ext(co.leader)) ok = ok && ctx.frobenius_fixed(e);
        s.expect(ok, "coefficients fixed by x -> x^q", "coefficient outside F_q", gam(co.leader));
    }
}

void lcm_check(PointCtx& c, Sink& s) {
    const GaloisField& F = c.field().base();
    const auto& fs = c.factors();
    auto rng = c.rng(s.check);
    std::vector<std::size_t> idx(fs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::vector<std::size_t> pick;
    std::sample(idx.begin(), idx.end(), std::back_inserter(pick), c.cfg.lcm_samples, rng);
    for (std::size_t i : pick) {
        const i64 g = fs[i].leader;
        const i64 other = c.part.index_of(norm(-g, c.fp.n));
        const Polynomial l = poly_lcm(F, fs[i].poly, fs[static_cast<std::size_t>(other)].poly);
        s.expect(is_self_reciprocal(F, l), "self-reciprocal", "not self-reciprocal", gam(g));
    }
}

// ------------------------------------------------------------------ golden

struct Golden {
    std::string expected;
    std::string actual;
};

void report_golden(Sink& s, const Golden& g, std::map<std::string, std::string> w = {}) {
    s.eval();
    s.emit(g.expected, g.actual, std::move(w), g.expected == g.actual ? Severity::info : Severity::theorem_mismatch);
}

bool at(const FamilyParams& fp, i64 q, i64 m, i64 lam) { return fp.q == q && fp.m == m && fp.lambda == lam; }

void golden_leaders(PointCtx& c, Sink& s) {
    if (at(c.fp, 5, 2, 2))
        report_golden(s, {"{0,1,2,3,4,6,7,8,9,13,14,16,26,27,29,39}", braces(c.part.leaders())});
    if (at(c.fp, 3, 3, 2))
        report_golden(s, {"{0,1,2,4,5,7,8,10,11,14,28,29,35}", braces(c.part.leaders())});
}

void golden_negation(PointCtx& c, Sink& s) {
    if (!at(c.fp, 3, 3, 2)) return;
    std::vector<i64> self;
    for (i64 l : c.part.leaders())
        if (negation_in_same_coset(c.part, l)) self.push_back(l);
    report_golden(s, {"{0,2,4,8,10,14,28}", braces(self)});
}

void golden_lcd(PointCtx& c, Sink& s) {
    if (!at(c.fp, 3, 3, 2)) return;
    const LcdReport r = pi_set(c.part);
    report_golden(s, {"10", std::to_string(r.pi_size_bruteforce)}, {{"source", "bruteforce"}});
    report_golden(s, {"10", r.pi_size_closed_form ? to_decimal(*r.pi_size_closed_form) : "non-integer"},
                  {{"source", "closed_form"}});
    report_golden(s, {"1023", to_decimal(r.count)}, {{"source", "lcd_count"}});
}

void golden_dimension(PointCtx& c, Sink& s) {
    auto dim = [&](i64 d) { return std::to_string(c.fp.n - static_cast<i64>(bch_defining_set(c.part, d, 0).size())); };
    if (at(c.fp, 5, 2, 2)) report_golden(s, {"47", dim(3)}, del(3));
    if (at(c.fp, 3, 3, 2)) {
        report_golden(s, {"43", dim(5)}, del(5));
        report_golden(s, {"29", dim(9)}, del(9));
    }
}

void golden_code(PointCtx& c, Sink& s) {
    if (!at(c.fp, 3, 3, 2)) return;
    const SymmetricCode sc = symmetric_bch_code(c.fp, 4, c.part, &c.field());
    const DistanceResult d = min_distance(c.field().base(), sc.code, {c.cfg.distance_budget, 0});
    std::ostringstream os;
    os << '[' << c.fp.n << ", " << sc.code.dimension << ", " << (d.exact ? std::to_string(d.upper) : "?") << ']';
    std::map<std::string, std::string> w = del(4);
    w["bound"] = std::to_string(sc.bound);
    report_golden(s, {"[56, 31, 10]", os.str()}, w);
}

void golden_dually(PointCtx& c, Sink& s) {
    if (!at(c.fp, 3, 3, 2)) return;
    const ExtremalLeaders e = extremal_leaders(c.fp);
    const auto sweep = dually_bch_sweep(c.part, e.delta1 + 1);
    std::optional<i64> lo, hi;
    for (i64 d = 3; d <= e.delta1 + 1; ++d)
        if (sweep[static_cast<std::size_t>(d - 2)]) {
            if (!lo) lo = d;
            hi = d;
        }
    report_golden(s, {"[31, 36]", "[" + str(lo) + ", " + str(hi) + "]"});
}

// ---------------------------------------------------------------- registry

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = [] {
        std::vector<CheckDef> d;
        auto pt = [&](std::string name, std::string suite, PointFn f) {
            d.push_back({std::move(name), std::move(suite), std::move(f), nullptr});
        };
        auto gl = [&](std::string name, std::string suite, GlobalFn f) {
            d.push_back({std::move(name), std::move(suite), nullptr, std::move(f)});
        };
        gl("numtheory.mobius_sum", "numtheory", mobius_sum);
        gl("numtheory.lte", "numtheory", lte);
        pt("numtheory.order_divisibility", "numtheory", order_divisibility);
        pt("cosets.partition", "cosets", partition_check);
        pt("cosets.reflection", "cosets", reflection_check);
        pt("cosets.fold", "cosets", fold_check);
        pt("cosets.half_period_fold", "cosets", half_period_check);
        pt("cosets.negation_closed_form", "cosets", negation_check);
        pt("leaders.proof_equivalence", "leaders", proof_equivalence);
        pt("leaders.statement_gap", "leaders", statement_gap);
        pt("leaders.guaranteed_range", "leaders", guaranteed_range_check);
        pt("extremal.delta1", "extremal", [](PointCtx& c, Sink& s) { extremal_check(c, s, false); });
        pt("extremal.delta2", "extremal", [](PointCtx& c, Sink& s) { extremal_check(c, s, true); });
        pt("extremal.delta1_residue", "extremal", delta1_residue_check);
        pt("extremal.nonleader_interval", "extremal", proposition_check);
        pt("spectrum.three_way", "spectrum", three_way);
        pt("spectrum.total", "spectrum", spectrum_total);
        pt("spectrum.corollary", "spectrum", spectrum_corollary_check);
        pt("dimension.closed_form", "dimension", dimension_check);
        pt("dimension.printed_variant", "dimension", dimension_printed);
        pt("dimension.symmetric", "dimension", symmetric_check);
        pt("dimension.symmetric_run", "dimension", symmetric_run_check);
        pt("dually_bch.interval", "dually_bch", dually_check);
        pt("lcd.pi_size", "lcd", pi_check);
        pt("lcd.corollary", "lcd", lcd_corollary_check);
        pt("lcd.sampled_generators", "lcd", lcd_sampled);
        pt("poly.product", "poly", product_check);
        pt("poly.self_reciprocal", "poly", self_reciprocal_check);
        pt("poly.reciprocal_involution", "poly", reciprocal_check);
        pt("poly.subfield", "poly", subfield_check);
        pt("poly.lcm_self_reciprocal", "poly", lcm_check);
        pt("golden.leaders", "golden", golden_leaders);
        pt("golden.negation_self", "golden", golden_negation);
        pt("golden.lcd", "golden", golden_lcd);
        pt("golden.dimension", "golden", golden_dimension);
        pt("golden.code", "golden", golden_code);
        pt("golden.dually_bch", "golden", golden_dually);
        return d;
    }();
    return defs;
}

const CheckDef& find_check(const std::string& name) {
    for (const auto& d : registry())
        if (d.name == name) return d;
    throw std::invalid_argument("unknown check: " + name);
}

void run_one(const CheckDef& def, PointCtx* c, const GridPoint& gp, Report& out) {
    Sink s{gp, def.name, &out};
    try {
        if (def.global)
            def.global(s);
        else
            def.point(*c, s);
    } catch (const std::exception& e) {
        s.emit("check completes", std::string("exception: ") + e.what(), {}, Severity::theorem_mismatch);
    }
}

void canonicalize(Report& r) {
    std::stable_sort(r.findings.begin(), r.findings.end(), [](const Finding& a, const Finding& b) {
        if (a.point != b.point) return a.point < b.point;
        return a.check < b.check;
    });
}

}  // namespace

std::string to_string(Severity s) {
    switch (s) {
        case Severity::theorem_mismatch: return "theorem_mismatch";
        case Severity::paper_variant_gap: return "paper_variant_gap";
        case Severity::info: return "info";
    }
    return "info";
}

std::string GridPoint::label() const {
    if (q == 0) return "global";
    std::ostringstream os;
    if (family != "main") os << family << ' ';
    os << "q=" << q << " m=" << m;
    if (family == "main") os << " lambda=" << lambda;
    os << " n=" << n;
    return os.str();
}

GridPoint grid_point(const FamilyParams& fp) { return {"main", fp.q, fp.m, fp.lambda, fp.n}; }

std::size_t Report::count(Severity s) const {
    return static_cast<std::size_t>(
        std::count_if(findings.begin(), findings.end(), [s](const Finding& f) { return f.severity == s; }));
}

GridSpec default_grid() {
    GridSpec g;
    g.q_values = {2, 3, 4, 5, 7, 8, 9};
    g.m_max = 6;
    g.n_cap = 200'000;
    return g;
}

std::vector<FamilyParams> expand(const GridSpec& grid) {
    std::set<std::array<i64, 3>> keys;
    auto fits = [&](i64 q, i64 m, i64 lam) {
        try {
            const FamilyParams fp = FamilyParams::make(q, m, lam);
            return fp.n <= grid.n_cap;
        } catch (const std::exception&) {
            return false;
        }
    };
    for (i64 q : grid.q_values) {
        prime_power(q);
        for (i64 m = 1; m <= grid.m_max; ++m)
            for (i64 lam : divisors(q - 1))
                if (fits(q, m, lam)) keys.insert({q, m, lam});
    }
    for (const auto& p : grid.points) {
        FamilyParams::make(p[0], p[1], p[2]);
        if (fits(p[0], p[1], p[2])) keys.insert(p);
    }
    std::vector<FamilyParams> out;
    for (const auto& k : keys) out.push_back(FamilyParams::make(k[0], k[1], k[2]));
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& d : registry())
            if (std::find(v.begin(), v.end(), d.suite) == v.end()) v.push_back(d.suite);
        return v;
    }();
    return names;
}

const std::vector<std::string>& check_names(const std::string& suite) {
    static const std::map<std::string, std::vector<std::string>> by = [] {
        std::map<std::string, std::vector<std::string>> m;
        for (const auto& d : registry()) m[d.suite].push_back(d.name);
        return m;
    }();
    auto it = by.find(suite);
    if (it == by.end()) throw std::invalid_argument("unknown suite: " + suite);
    return it->second;
}

std::string suite_of(const std::string& check) { return find_check(check).suite; }

int default_threads() {
    if (const char* env = std::getenv("CYCLOCODE_THREADS")) {
        try {
            const int t = std::stoi(env);
            if (t > 0) return t;
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Report verify_grid(const GridSpec& grid, const HarnessConfig& cfg) {
    std::vector<std::string> suites = grid.suites.empty() ? suite_names() : grid.suites;
    for (const auto& s : suites) check_names(s);
    auto enabled = [&](const CheckDef& d) { return std::find(suites.begin(), suites.end(), d.suite) != suites.end(); };

    const std::vector<FamilyParams> points = expand(grid);
    Report total;
    total.points = points.size();
    if (points.empty()) return total;

    // unit 0 holds the global checks; unit i + 1 is grid point i
    std::vector<Report> parts(points.size() + 1);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t u; (u = next.fetch_add(1)) < parts.size();) {
            if (u == 0) {
                for (const auto& d : registry())
                    if (d.global && enabled(d)) run_one(d, nullptr, GridPoint{}, parts[0]);
                continue;
            }
            const FamilyParams& fp = points[u - 1];
            PointCtx ctx(fp, cfg);
            const GridPoint gp = grid_point(fp);
            for (const auto& d : registry())
                if (d.point && enabled(d)) run_one(d, &ctx, gp, parts[u]);
        }
    };
    const int want = cfg.threads > 0 ? cfg.threads : default_threads();
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(want), parts.size());
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (auto& p : parts) {
        total.findings.insert(total.findings.end(), p.findings.begin(), p.findings.end());
        for (const auto& [k, v] : p.evaluations) total.evaluations[k] += v;
    }
    canonicalize(total);
    return total;
}

Report run_check(const std::string& check, const FamilyParams& fp, const HarnessConfig& cfg) {
    const CheckDef& d = find_check(check);
    Report r;
    r.points = 1;
    if (d.global) {
        run_one(d, nullptr, GridPoint{}, r);
    } else {
        PointCtx ctx(fp, cfg);
        run_one(d, &ctx, grid_point(fp), r);
    }
    canonicalize(r);
    return r;
}

Report run_global_check(const std::string& check) {
    const CheckDef& d = find_check(check);
    if (!d.global) throw std::invalid_argument(check + " is a per-point check");
    Report r;
    run_one(d, nullptr, GridPoint{}, r);
    return r;
}

std::optional<Finding> replay(const Finding& f, const HarnessConfig& cfg) {
    std::vector<Finding> got;
    if (f.point.family != "main") {
        got = conjecture_check(parse_conjecture_family(f.point.family), f.point.q, f.point.m, f.point.n);
    } else if (f.point.q == 0) {
        got = run_global_check(f.check).findings;
    } else {
        got = run_check(f.check, FamilyParams::make(f.point.q, f.point.m, f.point.lambda), cfg).findings;
    }
    for (const auto& g : got)
        if (g.check == f.check && g.witness == f.witness) return g;
    return std::nullopt;
}

// ------------------------------------------------------------- conjectures

std::string to_string(ConjectureFamily f) {
    return f == ConjectureFamily::qp1_qm_plus ? "qp1-qm-plus" : "qp1-qm-minus";
}

ConjectureFamily parse_conjecture_family(const std::string& s) {
    if (s == "qp1-qm-plus" || s == "qp1_qm_plus") return ConjectureFamily::qp1_qm_plus;
    if (s == "qp1-qm-minus" || s == "qp1_qm_minus") return ConjectureFamily::qp1_qm_minus;
    throw std::invalid_argument("unknown conjecture family: " + s);
}

ConjectureValues conjectured_values(ConjectureFamily family, i64 q, i64 m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("conjectures need odd m");
    prime_power(q);
    const i64 qm = ipow(q, static_cast<int>(m));
    ConjectureValues v;
    auto quarter = [&](i64 num, std::optional<i64>& out, const char* what) {
        if (num % 4 == 0)
            out = num / 4;
        else
            v.note += std::string(v.note.empty() ? "" : "; ") + what + " formula not integral";
    };
    if (family == ConjectureFamily::qp1_qm_plus) {
        const i64 M = qm + 1;
        v.n = (q + 1) * M;
        if (q % 4 == 1) {
            quarter(3 * (q + 1) * M, v.delta1, "delta1");
            quarter((3 * q - 1) * M, v.delta2, "delta2");
        } else if (q % 4 == 3) {
            quarter((3 * q + 1) * M, v.delta1, "delta1");
            quarter((3 * q * q + q - 4) * (qm / q) - (q - 1), v.delta2, "delta2");
        } else {
            v.note = "no formula for even q";
        }
    } else {
        v.n = (q + 1) * (qm - 1);
        v.delta1 = qm * q - qm / q - q - 1;
        if (m == 3)
            v.delta2 = (q * q - 1) * q * q - (2 * q + 1);
        else if (m > 3)
            v.delta2 = (q * q - 1) * (qm / q) - (q + 1) * (ipow(q, static_cast<int>((m - 1) / 2)) + 1);
        else
            v.note = "no delta2 formula for m = 1";
    }
    return v;
}

std::vector<Finding> conjecture_check(ConjectureFamily family, i64 q, i64 m, i64 n_cap) {
    const ConjectureValues v = conjectured_values(family, q, m);
    if (v.n > n_cap) throw std::invalid_argument("n = " + std::to_string(v.n) + " exceeds n_cap");
    const CosetPartition part(v.n, q);
    const auto& cs = part.cosets();
    const GridPoint gp{to_string(family), q, m, 0, v.n};
    std::vector<Finding> out;
    auto one = [&](const char* name, const std::optional<i64>& want, std::size_t rank) {
        std::map<std::string, std::string> w;
        std::string actual = "absent";
        if (cs.size() >= rank) {
            const Coset& c = cs[cs.size() - rank];
            actual = std::to_string(c.leader);
            w["coset_size"] = std::to_string(c.size);
        }
        w["verdict"] = !want ? "NA" : (actual == std::to_string(*want) ? "PASS" : "FAIL");
        out.push_back({gp, name, want ? std::to_string(*want) : (v.note.empty() ? "no formula" : v.note), actual, w,
                       Severity::info});
    };
    one("conjecture.delta1", v.delta1, 1);
    one("conjecture.delta2", v.delta2, 2);
    return out;
}

}  // namespace cyclo
