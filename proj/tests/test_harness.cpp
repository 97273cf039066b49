#include "cyclocode/harness.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "json.hpp"

using namespace cyclo;

namespace {

GridSpec small_grid() {
    GridSpec g;
    g.q_values = {3, 5};
    g.m_max = 3;
    g.n_cap = 600;
    return g;
}

HarnessConfig quick() {
    HarnessConfig c;
    c.threads = 2;
    c.lcd_samples = 10;
    c.lcm_samples = 5;
    return c;
}

const Report& small_report() {
    static const Report r = verify_grid(small_grid(), quick());
    return r;
}

std::vector<Finding> of(const Report& r, const std::string& check) {
    std::vector<Finding> out;
    for (const auto& f : r.findings)
        if (f.check == check) out.push_back(f);
    return out;
}

}  // namespace

TEST(Grid, DefaultGridShape) {
    auto pts = expand(default_grid());
    EXPECT_EQ(pts.size(), 96u);
    for (const auto& fp : pts) EXPECT_LE(fp.n, 200000);
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return std::tuple(a.q, a.m, a.lambda) < std::tuple(b.q, b.m, b.lambda);
    }));
}

TEST(Grid, ExplicitPointsDeduplicated) {
    GridSpec g;
    g.points = {{3, 3, 2}, {3, 3, 2}, {5, 2, 2}, {9, 6, 8}};
    g.n_cap = 1000;
    EXPECT_EQ(expand(g).size(), 2u);
    g.points.push_back({6, 2, 1});
    EXPECT_THROW(expand(g), std::invalid_argument);
}

TEST(Grid, EmptyGridEmptyReport) {
    GridSpec g;
    g.suites = {"cosets"};
    auto r = verify_grid(g, quick());
    EXPECT_EQ(r.points, 0u);
    EXPECT_TRUE(r.findings.empty());
}

TEST(Grid, UnknownSuiteThrows) {
    GridSpec g = small_grid();
    g.suites = {"nonsense"};
    EXPECT_THROW(verify_grid(g, quick()), std::invalid_argument);
}

TEST(Suites, Registry) {
    for (const char* s : {"numtheory", "cosets", "leaders", "extremal", "spectrum", "dimension", "dually_bch", "lcd",
                          "poly", "golden"}) {
        EXPECT_FALSE(check_names(s).empty()) << s;
        for (const auto& c : check_names(s)) EXPECT_EQ(suite_of(c), s);
    }
}

TEST(SmallGrid, NoProofVariantMismatch) {
    const auto& r = small_report();
    EXPECT_EQ(r.points, 15u);
    EXPECT_TRUE(of(r, "leaders.proof_equivalence").empty());
    EXPECT_GT(r.evaluations.at("leaders.proof_equivalence"), 0);
}

TEST(SmallGrid, StatementGapAtKnownWitness) {
    bool found = false;
    for (const auto& f : of(small_report(), "leaders.statement_gap")) {
        EXPECT_EQ(f.severity, Severity::paper_variant_gap);
        if (f.point.q == 5 && f.point.m == 2 && f.point.lambda == 2 && f.witness.at("gamma") == "11") found = true;
    }
    EXPECT_TRUE(found);
}

TEST(SmallGrid, MismatchesExactlyAtKnownFailures) {
    // genuine counterexamples: lambda = q - 1 at m = 2, and the m = 3 boundary of the symmetric formula
    const std::set<std::pair<std::string, std::string>> known = {
        {"q=3 m=3 lambda=2 n=56", "dimension.symmetric"},
        {"q=5 m=2 lambda=4 n=104", "dimension.closed_form"},
        {"q=5 m=2 lambda=4 n=104", "leaders.guaranteed_range"},
    };
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& f : small_report().findings) {
        if (f.severity != Severity::theorem_mismatch) continue;
        seen.insert({f.point.label(), f.check});
        EXPECT_TRUE(known.count({f.point.label(), f.check}))
            << f.point.label() << ' ' << f.check << " expected " << f.expected << " actual " << f.actual;
    }
    EXPECT_EQ(seen, known);
}

TEST(SmallGrid, GoldenValuesMatch) {
    const auto& r = small_report();
    for (const char* c : {"golden.leaders", "golden.negation_self", "golden.lcd", "golden.dimension", "golden.code",
                          "golden.dually_bch"}) {
        auto fs = of(r, c);
        ASSERT_FALSE(fs.empty()) << c;
        for (const auto& f : fs) {
            EXPECT_EQ(f.severity, Severity::info) << c;
            EXPECT_EQ(f.expected, f.actual) << c;
        }
    }
    bool code = false;
    for (const auto& f : of(r, "golden.code"))
        if (f.actual.find("10") != std::string::npos) code = true;
    EXPECT_TRUE(code);
}

TEST(SmallGrid, Deterministic) {
    HarnessConfig c = quick();
    c.threads = 1;
    auto a = verify_grid(small_grid(), c);
    EXPECT_EQ(a.findings, small_report().findings);
    EXPECT_EQ(a.evaluations, small_report().evaluations);
}

TEST(SmallGrid, ReplayReproduces) {
    const auto& r = small_report();
    int replayed = 0;
    for (const auto& f : r.findings) {
        if (f.point.q == 0 || f.check.rfind("golden.", 0) == 0) continue;
        if (++replayed > 25) break;
        auto again = replay(f, quick());
        ASSERT_TRUE(again) << f.check << ' ' << f.point.label();
        EXPECT_EQ(*again, f);
    }
    EXPECT_GT(replayed, 0);
}

TEST(SmallGrid, SuiteFilter) {
    GridSpec g = small_grid();
    g.suites = {"spectrum"};
    auto r = verify_grid(g, quick());
    for (const auto& [k, v] : r.evaluations) EXPECT_EQ(suite_of(k), "spectrum");
    for (const auto& f : r.findings) EXPECT_EQ(suite_of(f.check), "spectrum");
}

TEST(Report, JsonLine) {
    Finding f;
    f.point = grid_point(FamilyParams::make(5, 2, 2));
    f.check = "leaders.statement_gap";
    f.expected = "leader";
    f.actual = "not a leader";
    f.witness = {{"gamma", "11"}};
    f.severity = Severity::paper_variant_gap;
    auto j = nlohmann::json::parse(to_json_line(f));
    EXPECT_EQ(j["grid_point"]["n"], "52");
    EXPECT_EQ(j["grid_point"]["q"], 5);
    EXPECT_EQ(j["check"], "leaders.statement_gap");
    EXPECT_EQ(j["severity"], "paper_variant_gap");
    EXPECT_EQ(j["witness"]["gamma"], "11");
    std::ostringstream md;
    Report r;
    r.findings = {f};
    write_markdown(md, r, "t");
    EXPECT_NE(md.str().find("paper_variant_gap | 1"), std::string::npos);
}

TEST(Conjecture, Values) {
    auto p = conjectured_values(ConjectureFamily::qp1_qm_plus, 3, 3);
    EXPECT_EQ(p.n, 112);
    EXPECT_EQ(p.delta1, 70);
    auto m = conjectured_values(ConjectureFamily::qp1_qm_minus, 3, 3);
    EXPECT_EQ(m.n, 104);
    EXPECT_EQ(m.delta1, 68);
    EXPECT_EQ(conjectured_values(ConjectureFamily::qp1_qm_minus, 2, 3).delta2, 7);
    EXPECT_FALSE(conjectured_values(ConjectureFamily::qp1_qm_plus, 2, 3).delta1);
    EXPECT_THROW(conjectured_values(ConjectureFamily::qp1_qm_plus, 3, 2), std::invalid_argument);
    EXPECT_EQ(parse_conjecture_family("qp1_qm_minus"), ConjectureFamily::qp1_qm_minus);
    EXPECT_THROW(parse_conjecture_family("qp1"), std::invalid_argument);
}

TEST(Conjecture, CheckAgainstOracle) {
    auto fs = conjecture_check(ConjectureFamily::qp1_qm_plus, 3, 3);
    ASSERT_EQ(fs.size(), 2u);
    EXPECT_EQ(fs[0].check, "conjecture.delta1");
    EXPECT_EQ(fs[0].witness.at("verdict"), "PASS");
    EXPECT_THROW(conjecture_check(ConjectureFamily::qp1_qm_plus, 9, 5, 1000), std::invalid_argument);
}

TEST(Threads, EnvironmentOverride) {
    setenv("CYCLOCODE_THREADS", "3", 1);
    EXPECT_EQ(default_threads(), 3);
    setenv("CYCLOCODE_THREADS", "0", 1);
    EXPECT_GE(default_threads(), 1);
    unsetenv("CYCLOCODE_THREADS");
}
