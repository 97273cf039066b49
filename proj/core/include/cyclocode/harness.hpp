#pragma once

#include "cyclocode/cosets.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cyclo {

enum class Severity { theorem_mismatch, paper_variant_gap, info };

std::string to_string(Severity s);

// q = 0 marks the global (point-free) number theory checks.
struct GridPoint {
    std::string family = "main";
    i64 q = 0;
    i64 m = 0;
    i64 lambda = 0;
    i64 n = 0;

    auto operator<=>(const GridPoint&) const = default;
    std::string label() const;
};

GridPoint grid_point(const FamilyParams& fp);

struct Finding {
    GridPoint point;
    std::string check;
    std::string expected;
    std::string actual;
    std::map<std::string, std::string> witness;
    Severity severity = Severity::info;

    bool operator==(const Finding&) const = default;
};

struct GridSpec {
    std::vector<i64> q_values;
    i64 m_max = 0;
    i64 n_cap = 200'000;
    std::vector<std::array<i64, 3>> points;  // explicit (q, m, lambda), also capped by n_cap
    std::vector<std::string> suites;          // empty means all
};

GridSpec default_grid();

// Grid points in canonical order, deduplicated.
std::vector<FamilyParams> expand(const GridSpec& grid);

const std::vector<std::string>& suite_names();
const std::vector<std::string>& check_names(const std::string& suite);
std::string suite_of(const std::string& check);

struct HarnessConfig {
    int threads = 0;  // 0: CYCLOCODE_THREADS, else hardware concurrency
    std::uint64_t distance_budget = 100'000'000;
    int lcd_samples = 50;
    int lcm_samples = 20;
    std::uint64_t seed = 20240601;
};

// CYCLOCODE_THREADS if set and positive, else hardware concurrency (at least 1).
int default_threads();

struct Report {
    std::vector<Finding> findings;             // canonical order
    std::map<std::string, std::int64_t> evaluations;  // check -> comparisons made
    std::size_t points = 0;

    std::size_t count(Severity s) const;
    bool has_mismatch() const { return count(Severity::theorem_mismatch) > 0; }
};

// Throws std::invalid_argument for unknown suite names.
Report verify_grid(const GridSpec& grid, const HarnessConfig& cfg = {});

// Runs one named check at one point.
Report run_check(const std::string& check, const FamilyParams& fp, const HarnessConfig& cfg = {});
Report run_global_check(const std::string& check);

// Re-runs the finding's check and returns the finding with the same witness, if reproduced.
std::optional<Finding> replay(const Finding& f, const HarnessConfig& cfg = {});

enum class ConjectureFamily { qp1_qm_plus, qp1_qm_minus };

std::string to_string(ConjectureFamily f);
// Accepts qp1-qm-plus / qp1_qm_plus and the minus forms.
ConjectureFamily parse_conjecture_family(const std::string& s);

struct ConjectureValues {
    i64 n = 0;
    std::optional<i64> delta1;  // conjectured; absent where no formula applies
    std::optional<i64> delta2;
    std::string note;  // why a formula is absent
};

// Throws std::invalid_argument for even m.
ConjectureValues conjectured_values(ConjectureFamily family, i64 q, i64 m);

// Throws std::invalid_argument for even m or n above n_cap.
std::vector<Finding> conjecture_check(ConjectureFamily family, i64 q, i64 m, i64 n_cap = 200'000);

void write_jsonl(std::ostream& os, const std::vector<Finding>& findings);
void write_markdown(std::ostream& os, const Report& report, const std::string& title);
std::string to_json_line(const Finding& f);

}  // namespace cyclo
