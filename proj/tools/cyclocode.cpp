#include "cyclocode/codes.hpp"
#include "cyclocode/fieldpoly.hpp"
#include "cyclocode/harness.hpp"
#include "cyclocode/lcd.hpp"
#include "cyclocode/leaders.hpp"
#include "cyclocode/spectrum.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cyclo;

namespace {

using ojson = nlohmann::ordered_json;

struct Globals {
    int threads = 0;
    i64 n_cap = 200'000;
    std::uint64_t budget = 100'000'000;
    int lcd_samples = 50;
    std::uint64_t seed = HarnessConfig{}.seed;
};

struct Family {
    i64 q = 0, m = 0, lambda = 0;
    FamilyParams make() const { return FamilyParams::make(q, m, lambda); }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void family_options(CLI::App* sc, Family& f) {
    sc->add_option("--q", f.q, "field size (prime power)")->required();
    sc->add_option("--m", f.m, "n = lambda (q^m + 1)")->required();
    sc->add_option("--lambda", f.lambda, "divisor of q - 1")->required();
}

ojson head(const FamilyParams& fp) {
    return ojson{{"q", fp.q}, {"m", fp.m}, {"lambda", fp.lambda}, {"n", fp.n}};
}

void print(const ojson& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<i64>& xs, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
    return os.str();
}

// ------------------------------------------------------------------ cosets

int cmd_cosets(const Family& f, const std::string& format) {
    const FamilyParams fp = f.make();
    const CosetPartition part(fp);
    if (format == "csv") {
        std::cout << "leader,size,residue_a,negation_self,elements\n";
        for (const auto& c : part.cosets())
            std::cout << c.leader << ',' << c.size << ',' << c.residue_a << ','
                      << (negation_in_same_coset(part, c.leader) ? "true" : "false") << ',' << join(c.elements, " ")
                      << '\n';
        return 0;
    }
    if (format == "md") {
        std::cout << "# Cyclotomic cosets, q=" << fp.q << " m=" << fp.m << " lambda=" << fp.lambda << " n=" << fp.n
                  << "\n\n" << part.cosets().size() << " cosets\n\n| leader | size | a | -C = C | elements |\n"
                  << "|---|---|---|---|---|\n";
        for (const auto& c : part.cosets())
            std::cout << "| " << c.leader << " | " << c.size << " | " << c.residue_a << " | "
                      << (negation_in_same_coset(part, c.leader) ? "yes" : "no") << " | " << join(c.elements, ", ")
                      << " |\n";
        return 0;
    }
    ojson j = head(fp);
    j["coset_count"] = part.cosets().size();
    j["cosets"] = ojson::array();
    for (const auto& c : part.cosets())
        j["cosets"].push_back({{"leader", c.leader},
                               {"size", c.size},
                               {"residue_a", c.residue_a},
                               {"negation_self", negation_in_same_coset(part, c.leader)},
                               {"elements", c.elements}});
    print(j);
    return 0;
}

// ----------------------------------------------------------------- leaders

std::string reason(LeaderReason r) {
    switch (r) {
        case LeaderReason::range_violation: return "range_violation";
        case LeaderReason::excluded: return "excluded";
        case LeaderReason::leader: return "leader";
    }
    return "leader";
}

ojson verdict_json(const LeaderVerdict& v) {
    ojson j{{"gamma", v.gamma}, {"is_leader", v.is_leader}, {"reason", reason(v.reason)}};
    if (v.witness)
        j["witness"] = {{"family", to_string(v.witness->family_id)}, {"t", v.witness->t}, {"A", v.witness->A},
                        {"B", v.witness->B},  {"a", v.witness->a},  {"value", v.witness->value}};
    else
        j["witness"] = nullptr;
    return j;
}

int cmd_leaders(const Family& f, const std::string& variant_s, std::optional<i64> gamma) {
    const FamilyParams fp = f.make();
    const EVariant variant = parse_variant(variant_s);
    const CosetPartition part(fp);
    const Severity sev = variant == EVariant::proof ? Severity::theorem_mismatch : Severity::paper_variant_gap;
    ojson j = head(fp);
    j["variant"] = to_string(variant);
    bool mismatch = false;
    if (gamma) {
        if (*gamma < 0 || *gamma >= fp.n) throw UsageError("--gamma must lie in [0, n)");
        LeaderVerdict v = is_leader_closed_form(fp, *gamma, variant);
        const bool oracle = part.leader_of(*gamma) == *gamma;
        ojson vj = verdict_json(v);
        vj["oracle_is_leader"] = oracle;
        vj["oracle_leader"] = part.leader_of(*gamma);
        vj["agree"] = oracle == v.is_leader;
        if (oracle != v.is_leader) vj["severity"] = to_string(sev);
        mismatch = oracle != v.is_leader && variant == EVariant::proof;
        j["verdict"] = vj;
    } else {
        std::vector<i64> leaders;
        ojson dis = ojson::array();
        for (i64 g = 0; g < fp.n; ++g) {
            LeaderVerdict v = is_leader_closed_form(fp, g, variant);
            if (v.is_leader) leaders.push_back(g);
            const bool oracle = part.leader_of(g) == g;
            if (oracle != v.is_leader) {
                ojson d = verdict_json(v);
                d["oracle_is_leader"] = oracle;
                d["severity"] = to_string(sev);
                dis.push_back(d);
            }
        }
        mismatch = !dis.empty() && variant == EVariant::proof;
        j["leader_count"] = leaders.size();
        j["leaders"] = leaders;
        j["oracle_leader_count"] = part.cosets().size();
        j["disagreements"] = dis;
        if (fp.m >= 2) {
            const GuaranteedRange r = guaranteed_leader_range(fp);
            ojson ex = ojson::array();
            for (const auto& [g, s] : r.exceptions) ex.push_back({{"gamma", g}, {"size", s}});
            j["guaranteed_range"] = {{"gamma_max", r.gamma_max}, {"size", r.size}, {"exceptions", ex}};
        }
    }
    print(j);
    return mismatch ? 1 : 0;
}

// ------------------------------------------------------------------- delta

int cmd_delta(const Family& f) {
    const FamilyParams fp = f.make();
    const CosetPartition part(fp);
    const auto& cs = part.cosets();
    ojson j = head(fp);
    ojson o{{"delta1", cs.back().leader}, {"delta1_coset_size", cs.back().size}};
    if (cs.size() >= 2) {
        o["delta2"] = cs[cs.size() - 2].leader;
        o["delta2_coset_size"] = cs[cs.size() - 2].size;
    }
    j["oracle"] = o;
    bool mismatch = false;
    if (fp.m % 2 == 1) {
        const ExtremalLeaders e = extremal_leaders(fp);
        ojson c{{"delta1", e.delta1}, {"delta1_coset_size", e.delta1_coset_size}};
        c["delta2"] = e.delta2 ? ojson(*e.delta2) : ojson(nullptr);
        c["delta2_coset_size"] = e.delta2_coset_size ? ojson(*e.delta2_coset_size) : ojson(nullptr);
        j["closed_form"] = c;
        bool agree = e.delta1 == cs.back().leader && e.delta1_coset_size == cs.back().size;
        if (e.delta2 && cs.size() >= 2)
            agree = agree && *e.delta2 == cs[cs.size() - 2].leader && *e.delta2_coset_size == cs[cs.size() - 2].size;
        j["agree"] = agree;
        mismatch = !agree;
    } else {
        j["closed_form"] = nullptr;
        j["note"] = "closed form covers odd m only";
    }
    print(j);
    return mismatch ? 1 : 0;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const Family& f) {
    const FamilyParams fp = f.make();
    const SizeSpectrum oracle = spectrum_oracle(CosetPartition(fp));
    const SizeSpectrum general = spectrum_general(fp);
    std::optional<SizeSpectrum> closed;
    std::string closed_error;
    try {
        closed = spectrum_closed_form(fp);
    } catch (const std::domain_error& e) {
        closed_error = e.what();
    }
    std::set<i64> taus;
    for (const auto* s : {&oracle, &general}) for (const auto& [t, c] : s->entries) taus.insert(t);
    if (closed) for (const auto& [t, c] : closed->entries) taus.insert(t);
    auto get = [](const SizeSpectrum& s, i64 t) {
        auto it = s.entries.find(t);
        return it == s.entries.end() ? std::string("0") : to_decimal(it->second);
    };
    ojson j = head(fp);
    j["v"] = general.v;
    j["m0"] = general.m0;
    j["h"] = general.h;
    j["entries"] = ojson::array();
    for (i64 t : taus)
        j["entries"].push_back({{"tau", t},
                                {"closed_form", closed ? ojson(get(*closed, t)) : ojson(nullptr)},
                                {"general", get(general, t)},
                                {"oracle", get(oracle, t)}});
    const bool agree = closed && *closed == oracle && general == oracle;
    j["weighted_total"] = to_decimal(oracle.weighted_total());
    if (!closed_error.empty()) j["closed_form_error"] = closed_error;
    if (auto cor = spectrum_corollary(fp)) j["corollary_agrees"] = *cor == oracle;
    j["agree"] = agree;
    print(j);
    return agree ? 0 : 1;
}

// --------------------------------------------------------------------- bch

int cmd_bch(const Family& f, i64 delta, i64 b, std::uint64_t budget) {
    const FamilyParams fp = f.make();
    const CosetPartition part(fp);
    if (delta < 2 || delta > fp.n) throw UsageError("--delta must lie in [2, n]");
    const BCHSpec spec{fp, delta, ((b % fp.n) + fp.n) % fp.n};
    const FieldContext ctx(fp);
    const CyclicCode code = code_from_spec(spec, part, &ctx);
    ojson j = head(fp);
    j["delta"] = delta;
    j["b"] = spec.b;
    j["dimension"] = code.dimension;
    bool mismatch = false;
    std::optional<i64> formula;
    if (spec.b == 0 && fp.m >= 2) {
        try {
            formula = dimension_closed_form(fp, delta);
        } catch (const std::domain_error&) {
        }
    }
    j["dimension_source"] = formula ? "closed_form" : "oracle";
    if (formula) {
        j["dimension_formula"] = *formula;
        mismatch = *formula != code.dimension;
        j["dimension_agree"] = !mismatch;
    }
    j["bose_distance"] = bose_distance(part, delta, spec.b);
    if (code.dimension > 0 && budget > 0) {
        const DistanceResult d = min_distance(ctx.base(), code, {budget, 0});
        j["d_lower"] = d.lower;
        j["d_upper"] = d.upper;
        j["d_exact"] = d.exact;
        j["distance_status"] = to_string(d.status);
        j["effort"] = std::to_string(d.effort);
    } else {
        j["d_lower"] = nullptr;
        j["d_upper"] = nullptr;
        j["d_exact"] = false;
    }
    j["generator"] = code.generator->coeffs;
    j["defining_set_leaders"] = code.leaders;
    print(j);
    return mismatch ? 1 : 0;
}

// -------------------------------------------------------------- dually-bch

int cmd_dually(const Family& f, i64 delta) {
    const FamilyParams fp = f.make();
    const CosetPartition part(fp);
    if (delta < 2 || delta > fp.n) throw UsageError("--delta must lie in [2, n]");
    const bool brute = dually_bch(part, delta, Mode::bruteforce);
    const auto S = dual_defining_set(fp.n, bch_defining_set(part, delta, 0));
    ojson j = head(fp);
    j["delta"] = delta;
    j["dually_bch"] = brute;
    if (auto form = is_bch_form(part, S))
        j["dual_bch_form"] = {{"b", form->first}, {"delta", form->second}};
    else
        j["dual_bch_form"] = nullptr;
    bool mismatch = false;
    try {
        const bool closed = dually_bch(part, delta, Mode::closed_form);
        j["closed_form"] = closed;
        j["agree"] = closed == brute;
        mismatch = closed != brute;
    } catch (const std::domain_error& e) {
        j["closed_form"] = nullptr;
        j["note"] = e.what();
    }
    print(j);
    return mismatch ? 1 : 0;
}

// --------------------------------------------------------------------- lcd

int cmd_lcd(const Family& f) {
    const FamilyParams fp = f.make();
    const LcdReport r = pi_set(fp);
    ojson j = head(fp);
    j["gamma_count"] = r.Gamma.size();
    j["pi_size_bruteforce"] = r.pi_size_bruteforce;
    j["pi_size_closed_form"] = r.pi_size_closed_form ? ojson(to_decimal(*r.pi_size_closed_form)) : ojson(nullptr);
    const bool agree = r.pi_size_closed_form && *r.pi_size_closed_form == r.pi_size_bruteforce;
    j["agree"] = agree;
    j["count_decimal"] = to_decimal(r.count);
    print(j);
    return agree ? 0 : 1;
}

// ------------------------------------------------------------------ verify

void split_into(const std::vector<std::string>& inputs, std::vector<std::string>& out) {
    for (const auto& in : inputs) {
        std::string tok;
        for (char ch : in + " ") {
            if (ch == ',' || ch == ' ' || ch == '\t') {
                if (!tok.empty()) out.push_back(tok);
                tok.clear();
            } else {
                tok += ch;
            }
        }
    }
}

i64 to_int(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("grid file: bad integer '" + s + "' for " + key);
    }
}

GridSpec read_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open grid file " + path);
    GridSpec g;
    g.m_max = 0;
    for (const auto& item : CLI::ConfigINI().from_config(in)) {
        std::string key = item.fullname();
        for (auto& ch : key)
            if (ch == '-') ch = '_';
        std::vector<std::string> vals;
        split_into(item.inputs, vals);
        if (key == "q" || key == "q_values") {
            for (const auto& v : vals) g.q_values.push_back(to_int(v, key));
        } else if (key == "m_max") {
            if (vals.size() != 1) throw UsageError("grid file: m_max takes one value");
            g.m_max = to_int(vals[0], key);
        } else if (key == "n_cap") {
            if (vals.size() != 1) throw UsageError("grid file: n_cap takes one value");
            g.n_cap = to_int(vals[0], key);
        } else if (key == "points" || key == "point") {
            for (const auto& v : vals) {
                std::vector<std::string> parts;
                std::string tok;
                for (char ch : v + ":") {
                    if (ch == ':') {
                        parts.push_back(tok);
                        tok.clear();
                    } else {
                        tok += ch;
                    }
                }
                if (parts.size() != 3) throw UsageError("grid file: points are q:m:lambda, got " + v);
                g.points.push_back({to_int(parts[0], key), to_int(parts[1], key), to_int(parts[2], key)});
            }
        } else if (key == "suites" || key == "suite") {
            g.suites.insert(g.suites.end(), vals.begin(), vals.end());
        } else {
            throw UsageError("grid file: unknown key " + item.fullname());
        }
    }
    return g;
}

int cmd_verify(const Globals& gl, const std::string& grid_file, bool def, const std::vector<std::string>& suites,
               const std::string& jsonl, const std::string& markdown, bool n_cap_set) {
    if (grid_file.empty() == !def) throw UsageError("verify needs exactly one of --grid-file or --default-grid");
    GridSpec grid = def ? default_grid() : read_grid_file(grid_file);
    if (n_cap_set) grid.n_cap = gl.n_cap;
    if (!suites.empty()) grid.suites = suites;
    for (const auto& s : grid.suites) {
        const auto& all = suite_names();
        if (std::find(all.begin(), all.end(), s) == all.end()) throw UsageError("unknown suite: " + s);
    }
    HarnessConfig cfg;
    cfg.threads = gl.threads;
    cfg.distance_budget = gl.budget;
    cfg.lcd_samples = gl.lcd_samples;
    cfg.seed = gl.seed;
    const Report r = verify_grid(grid, cfg);
    if (jsonl == "-") {
        write_jsonl(std::cout, r.findings);
    } else {
        std::ofstream os(jsonl);
        if (!os) throw UsageError("cannot write " + jsonl);
        write_jsonl(os, r.findings);
    }
    if (!markdown.empty()) {
        std::ofstream os(markdown);
        if (!os) throw UsageError("cannot write " + markdown);
        write_markdown(os, r, "Verification report");
    }
    std::cerr << r.points << " grid points, " << r.count(Severity::theorem_mismatch) << " theorem_mismatch, "
              << r.count(Severity::paper_variant_gap) << " paper_variant_gap, " << r.count(Severity::info)
              << " info\n";
    return r.has_mismatch() ? 1 : 0;
}

// -------------------------------------------------------------- conjecture

int cmd_conjecture(const std::string& family, i64 q, i64 m, i64 n_cap) {
    ConjectureFamily fam;
    try {
        fam = parse_conjecture_family(family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (m % 2 == 0) throw UsageError("conjecture needs odd --m");
    write_jsonl(std::cout, conjecture_check(fam, q, m, n_cap));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclotomic cosets, BCH and LCD codes for n = lambda (q^m + 1)"};
    app.set_config("--config", "", "key=value file with option defaults");
    app.require_subcommand(1);
    Globals gl;
    app.add_option("--threads", gl.threads, "worker threads (default CYCLOCODE_THREADS or all cores)");
    auto* ncap_opt = app.add_option("--n-cap", gl.n_cap, "largest n considered");
    app.add_option("--min-distance-budget", gl.budget, "message prefixes visited by the distance search");
    app.add_option("--lcd-samples", gl.lcd_samples, "random LCD generators built per grid point");
    app.add_option("--seed", gl.seed, "sampling seed");

    Family fam;
    std::string format = "json", variant = "proof";
    std::optional<i64> gamma;
    i64 delta = 0, b = 0;

    auto* c_cosets = app.add_subcommand("cosets", "coset partition");
    family_options(c_cosets, fam);
    c_cosets->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "md"}));

    auto* c_leaders = app.add_subcommand("leaders", "closed-form leader test against the oracle");
    family_options(c_leaders, fam);
    c_leaders->add_option("--e-variant", variant)->check(CLI::IsMember({"statement", "proof"}));
    c_leaders->add_option("--gamma", gamma);

    auto* c_delta = app.add_subcommand("delta", "largest and second largest coset leaders");
    family_options(c_delta, fam);

    auto* c_spectrum = app.add_subcommand("spectrum", "number of cosets of each size");
    family_options(c_spectrum, fam);

    auto* c_bch = app.add_subcommand("bch", "BCH code parameters");
    family_options(c_bch, fam);
    c_bch->add_option("--delta", delta)->required();
    c_bch->add_option("--b", b);

    auto* c_dually = app.add_subcommand("dually-bch", "is the dual of the b = 0 BCH code again BCH");
    family_options(c_dually, fam);
    c_dually->add_option("--delta", delta)->required();

    auto* c_lcd = app.add_subcommand("lcd-count", "number of LCD cyclic codes");
    family_options(c_lcd, fam);

    auto* c_verify = app.add_subcommand("verify", "cross-check closed forms against oracles on a grid");
    std::string grid_file, jsonl = "-", markdown;
    bool def = false;
    std::vector<std::string> suites;
    auto* gf = c_verify->add_option("--grid-file", grid_file, "key=value grid description");
    auto* dg = c_verify->add_flag("--default-grid", def);
    gf->excludes(dg);
    c_verify->add_option("--suite", suites)->expected(1, -1);
    c_verify->add_option("--jsonl", jsonl, "findings as JSON lines ('-' for stdout)");
    c_verify->add_option("--markdown", markdown, "Markdown summary path");

    auto* c_conj = app.add_subcommand("conjecture", "check the conjectured extremal leaders");
    std::string family;
    c_conj->add_option("--family", family)->required()->check(CLI::IsMember({"qp1-qm-plus", "qp1-qm-minus"}));
    c_conj->add_option("--q", fam.q)->required();
    c_conj->add_option("--m", fam.m)->required();

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_cosets) return cmd_cosets(fam, format);
        if (*c_leaders) return cmd_leaders(fam, variant, gamma);
        if (*c_delta) return cmd_delta(fam);
        if (*c_spectrum) return cmd_spectrum(fam);
        if (*c_bch) return cmd_bch(fam, delta, b, gl.budget);
        if (*c_dually) return cmd_dually(fam, delta);
        if (*c_lcd) return cmd_lcd(fam);
        if (*c_verify) return cmd_verify(gl, grid_file, def, suites, jsonl, markdown, ncap_opt->count() > 0);
        if (*c_conj) return cmd_conjecture(family, fam.q, fam.m, gl.n_cap);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
