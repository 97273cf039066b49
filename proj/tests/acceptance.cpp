#include "cyclocode/codes.hpp"
#include "cyclocode/harness.hpp"
#include "cyclocode/lcd.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace cyclo;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

HarnessConfig config() {
    HarnessConfig c;
    c.threads = default_threads();
    return c;
}

Report run_suite(const std::string& suite) {
    GridSpec g = default_grid();
    g.suites = {suite};
    return verify_grid(g, config());
}

std::size_t mismatches(const Report& r, const std::string& check, std::string* first = nullptr) {
    std::size_t k = 0;
    for (const auto& f : r.findings) {
        if (f.severity != Severity::theorem_mismatch || (!check.empty() && f.check != check)) continue;
        if (k++ == 0 && first)
            *first = f.point.label() + " " + f.check + " expected " + f.expected + " actual " + f.actual;
    }
    return k;
}

Outcome suite_clean(const std::string& suite, const std::vector<std::string>& checks) {
    auto r = run_suite(suite);
    Outcome o;
    std::size_t comparisons = 0;
    for (const auto& c : checks) {
        std::string first;
        const std::size_t k = mismatches(r, c, &first);
        comparisons += static_cast<std::size_t>(r.evaluations.count(c) ? r.evaluations.at(c) : 0);
        if (k) {
            o.ok = false;
            o.detail += c + ": " + std::to_string(k) + " mismatches, first " + first + "; ";
        }
    }
    if (comparisons == 0) {
        o.ok = false;
        o.detail += "no comparisons made; ";
    }
    o.detail += std::to_string(r.points) + " points, " + std::to_string(comparisons) + " comparisons";
    return o;
}

Outcome golden_leaders() {
    CosetPartition p(FamilyParams::make(5, 2, 2));
    const std::vector<i64> want = {0, 1, 2, 3, 4, 6, 7, 8, 9, 13, 14, 16, 26, 27, 29, 39};
    return {p.leaders() == want, "leaders " + join(p.leaders())};
}

Outcome golden_census() {
    auto fp = FamilyParams::make(3, 3, 2);
    CosetPartition p(fp);
    std::vector<i64> neg;
    for (i64 l : p.leaders())
        if (negation_in_same_coset(p, l)) neg.push_back(l);
    auto lcd = pi_set(p);
    const bool ok = p.leaders() == std::vector<i64>{0, 1, 2, 4, 5, 7, 8, 10, 11, 14, 28, 29, 35} &&
                    neg == std::vector<i64>{0, 2, 4, 8, 10, 14, 28} && lcd.pi_size_bruteforce == 10 &&
                    lcd.pi_size_closed_form && *lcd.pi_size_closed_form == 10 && lcd_count(fp) == 1023;
    return {ok, "leaders " + join(p.leaders()) + " negation-self " + join(neg) + " |Pi| " +
                    std::to_string(lcd.pi_size_bruteforce) + " count " + lcd_count(fp).str()};
}

Outcome golden_code() {
    auto fp = FamilyParams::make(3, 3, 2);
    auto s = symmetric_bch_code(fp, 4);
    FieldContext ctx(fp);
    auto d = min_distance(ctx.base(), s.code);
    const bool ok = s.code.params.n == 56 && s.code.dimension == 31 && s.bound == 10 && d.exact && d.lower == 10;
    return {ok, "[" + std::to_string(s.code.params.n) + "," + std::to_string(s.code.dimension) + "] bound " +
                    std::to_string(s.bound) + " distance " + std::to_string(d.lower) + ".." + std::to_string(d.upper) +
                    " effort " + std::to_string(d.effort)};
}

Outcome leader_equivalence() {
    auto r = run_suite("leaders");
    std::string first;
    const std::size_t k = mismatches(r, "leaders.proof_equivalence", &first);
    bool gap = false;
    std::size_t gaps = 0;
    for (const auto& f : r.findings) {
        if (f.check != "leaders.statement_gap") continue;
        ++gaps;
        if (f.severity == Severity::paper_variant_gap && f.point.q == 5 && f.point.m == 2 && f.point.lambda == 2 &&
            f.witness.count("gamma") && f.witness.at("gamma") == "11")
            gap = true;
    }
    Outcome o{k == 0 && gap && r.evaluations.at("leaders.proof_equivalence") > 0, ""};
    o.detail = std::to_string(r.evaluations.at("leaders.proof_equivalence")) + " residues, " + std::to_string(k) +
               " proof mismatches, " + std::to_string(gaps) + " statement gaps, gamma=11 at (5,2,2) " +
               (gap ? "present" : "absent");
    if (k) o.detail += ", first " + first;
    return o;
}

Outcome dimension_formulas() {
    Outcome o = suite_clean("dimension", {"dimension.closed_form", "dimension.symmetric"});
    const bool spots = dimension_closed_form(FamilyParams::make(5, 2, 2), 3) == 47 &&
                       dimension_closed_form(FamilyParams::make(3, 3, 2), 5) == 43 &&
                       dimension_closed_form(FamilyParams::make(3, 3, 2), 9) == 29;
    if (!spots) {
        o.ok = false;
        o.detail += "; spot values differ";
    }
    return o;
}

Outcome dually_bch_interval() {
    Outcome o = suite_clean("dually_bch", {"dually_bch.interval"});
    CosetPartition p(FamilyParams::make(3, 3, 2));
    std::vector<i64> yes;
    for (i64 d = 3; d <= 36; ++d)
        if (dually_bch(p, d, Mode::bruteforce)) yes.push_back(d);
    if (yes.empty() || yes.front() != 31 || yes.back() != 36 || yes.size() != 6) {
        o.ok = false;
        o.detail += "; (3,3,2) interval " + join(yes);
    }
    return o;
}

Outcome numtheory_properties() {
    Outcome o;
    std::int64_t comparisons = 0;
    for (const char* c : {"numtheory.mobius_sum", "numtheory.lte"}) {
        auto r = run_global_check(c);
        comparisons += r.evaluations[c];
        if (r.has_mismatch()) {
            o.ok = false;
            o.detail += std::string(c) + " failed; ";
        }
    }
    GridSpec g = default_grid();
    g.suites = {"numtheory"};
    auto r = verify_grid(g, config());
    comparisons += r.evaluations["numtheory.order_divisibility"];
    if (r.has_mismatch()) {
        o.ok = false;
        o.detail += "order divisibility failed; ";
    }
    o.detail += std::to_string(comparisons) + " comparisons";
    return o;
}

Outcome conjectures() {
    auto run = [] {
        std::vector<Finding> all;
        for (i64 q : {2, 3, 4, 5})
            for (auto fam : {ConjectureFamily::qp1_qm_plus, ConjectureFamily::qp1_qm_minus})
                for (i64 m = 1;; m += 2) {
                    auto v = conjectured_values(fam, q, m);
                    if (v.n > 200'000) break;
                    auto fs = conjecture_check(fam, q, m);
                    all.insert(all.end(), fs.begin(), fs.end());
                }
        return all;
    };
    auto a = run();
    auto b = run();
    std::size_t pass = 0, fail = 0, na = 0;
    bool verdicts = true;
    for (const auto& f : a) {
        auto it = f.witness.find("verdict");
        if (it == f.witness.end()) {
            verdicts = false;
            continue;
        }
        (it->second == "PASS" ? pass : it->second == "FAIL" ? fail : na)++;
    }
    return {a == b && !a.empty() && verdicts && pass + fail > 0,
            std::to_string(a.size()) + " findings: " + std::to_string(pass) + " PASS, " + std::to_string(fail) +
                " FAIL, " + std::to_string(na) + " NA, deterministic " + (a == b ? "yes" : "no")};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"golden leader list", 1, golden_leaders},
        {"golden coset census", 1, golden_census},
        {"golden code", 300, golden_code},
        {"leader equivalence", 600, leader_equivalence},
        {"extremal leaders", 300,
         [] { return suite_clean("extremal", {"extremal.delta1", "extremal.delta2", "extremal.delta1_residue"}); }},
        {"spectrum three-way", 300,
         [] { return suite_clean("spectrum", {"spectrum.three_way", "spectrum.total", "spectrum.corollary"}); }},
        {"dimension formulas", 600, dimension_formulas},
        {"dually-BCH interval", 600, dually_bch_interval},
        {"polynomial layer", 300,
         [] { return suite_clean("poly", {"poly.product", "poly.self_reciprocal", "poly.reciprocal_involution"}); }},
        {"numtheory properties", 10, numtheory_properties},
        {"conjecture reports", 300, conjectures},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > c.limit_s) {
            o.ok = false;
            o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << ' ' << std::setw(2) << i + 1 << ' ' << c.name << " (" << std::fixed
                  << std::setprecision(2) << s << " s): " << o.detail << std::endl;
    }
    std::cout << criteria.size() - failed << '/' << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
