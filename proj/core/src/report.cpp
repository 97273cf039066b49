#include "cyclocode/harness.hpp"

#include "json.hpp"

#include <ostream>

namespace cyclo {

namespace {

using ojson = nlohmann::ordered_json;

ojson point_json(const GridPoint& p) {
    if (p.q == 0) return ojson{{"family", "global"}};
    ojson j;
    j["family"] = p.family;
    j["q"] = p.q;
    j["m"] = p.m;
    if (p.family == "main") j["lambda"] = p.lambda;
    j["n"] = std::to_string(p.n);
    return j;
}

std::string cell(std::string s) {
    for (auto& ch : s)
        if (ch == '|') ch = '/';
    if (s.size() > 80) s = s.substr(0, 77) + "...";
    return s;
}

}  // namespace

std::string to_json_line(const Finding& f) {
    ojson j;
    j["grid_point"] = point_json(f.point);
    j["check"] = f.check;
    j["severity"] = to_string(f.severity);
    j["expected"] = f.expected;
    j["actual"] = f.actual;
    j["witness"] = ojson::object();
    for (const auto& [k, v] : f.witness) j["witness"][k] = v;
    return j.dump();
}

void write_jsonl(std::ostream& os, const std::vector<Finding>& findings) {
    for (const auto& f : findings) os << to_json_line(f) << '\n';
}

void write_markdown(std::ostream& os, const Report& r, const std::string& title) {
    os << "# " << title << "\n\n";
    os << "Grid points: " << r.points << "\n\n";
    os << "| severity | findings |\n|---|---|\n";
    for (auto s : {Severity::theorem_mismatch, Severity::paper_variant_gap, Severity::info})
        os << "| " << to_string(s) << " | " << r.count(s) << " |\n";

    os << "\n## Checks\n\n| check | comparisons | mismatch | gap | info |\n|---|---|---|---|---|\n";
    std::map<std::string, std::array<std::size_t, 3>> per;
    for (const auto& [k, v] : r.evaluations) per[k];
    for (const auto& f : r.findings) per[f.check][static_cast<std::size_t>(f.severity)]++;
    for (const auto& [k, c] : per) {
        auto it = r.evaluations.find(k);
        os << "| " << k << " | " << (it == r.evaluations.end() ? 0 : it->second) << " | " << c[0] << " | " << c[1]
           << " | " << c[2] << " |\n";
    }

    if (r.findings.empty()) return;
    os << "\n## Findings\n\n| point | check | severity | expected | actual | witness |\n|---|---|---|---|---|---|\n";
    std::size_t shown = 0;
    for (const auto& f : r.findings) {
        if (shown++ == 500) {
            os << "\n(" << r.findings.size() - 500 << " more in the JSON-lines report)\n";
            break;
        }
        std::string w;
        for (const auto& [k, v] : f.witness) w += (w.empty() ? "" : " ") + k + "=" + v;
        os << "| " << f.point.label() << " | " << f.check << " | " << to_string(f.severity) << " | "
           << cell(f.expected) << " | " << cell(f.actual) << " | " << cell(w) << " |\n";
    }
}

}  // namespace cyclo
