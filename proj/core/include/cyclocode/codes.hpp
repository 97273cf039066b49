#pragma once

#include "cyclocode/cosets.hpp"
#include "cyclocode/fieldpoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclo {

struct BCHSpec {
    FamilyParams params;
    i64 delta = 2;
    i64 b = 0;
};

struct CyclicCode {
    FamilyParams params;
    std::vector<i64> defining_set;  // sorted residues
    std::vector<i64> leaders;       // leaders of the cosets in the defining set
    std::optional<Polynomial> generator;
    i64 dimension = 0;
};

enum class DistanceStatus { exact, budget_exhausted };

struct DistanceResult {
    i64 lower = 0;
    i64 upper = 0;
    bool exact = false;
    std::uint64_t effort = 0;  // message prefixes visited
    DistanceStatus status = DistanceStatus::exact;
};

struct DistanceOptions {
    std::uint64_t budget = 100'000'000;
    i64 seed_lower = 0;  // any externally known lower bound
};

std::vector<i64> bch_defining_set(const CosetPartition& part, i64 delta, i64 b);
std::vector<i64> bch_defining_set(const BCHSpec& spec);

// Generator is built when ctx is given.
CyclicCode code_from_defining_set(const CosetPartition& part, std::vector<i64> T, const FieldContext* ctx);
CyclicCode code_from_spec(const BCHSpec& spec, const CosetPartition& part, const FieldContext* ctx);
CyclicCode code_from_spec(const BCHSpec& spec);

i64 bose_distance(const CosetPartition& part, i64 delta, i64 b);
i64 bose_distance(const BCHSpec& spec);

// Longest cyclic run of consecutive residues inside T.
i64 longest_run(i64 n, const std::vector<i64>& T);

enum class DimVariant { corrected, printed };

// Largest delta covered by the b = 0 dimension formulas; throws std::domain_error for m = 1.
i64 dimension_delta_max(const FamilyParams& fp);

// Throws std::domain_error outside 3 <= delta <= dimension_delta_max.
i64 dimension_closed_form(const FamilyParams& fp, i64 delta, DimVariant variant = DimVariant::corrected);

struct SymmetricCode {
    CyclicCode code;
    i64 bound = 0;
    std::optional<i64> formula_dimension;  // present when the hypotheses hold
    bool has_consecutive_run = false;      // contains -delta, ..., delta
    std::string factored_generator;
};

bool symmetric_hypotheses(const FamilyParams& fp, i64 delta);
// Throws std::domain_error when the hypotheses fail.
i64 symmetric_dimension_formula(const FamilyParams& fp, i64 delta);

// Throws std::invalid_argument unless lambda | delta.
SymmetricCode symmetric_bch_code(const FamilyParams& fp, i64 delta, const CosetPartition& part, const FieldContext* ctx);
SymmetricCode symmetric_bch_code(const FamilyParams& fp, i64 delta);

std::vector<i64> dual_defining_set(i64 n, const std::vector<i64>& T);

bool is_lcd(const GaloisField& F, const CyclicCode& code);
bool is_lcd_by_set(i64 n, const std::vector<i64>& T);

// (b, delta) with T = C_b u ... u C_{b + delta - 2}; smallest b, largest delta.
// T = Z_n gives (0, n); T empty gives absent.
std::optional<std::pair<i64, i64>> is_bch_form(const CosetPartition& part, const std::vector<i64>& T);

// b = 0. The closed form throws std::domain_error outside its hypotheses.
bool dually_bch(const CosetPartition& part, i64 delta, Mode mode);

// Brute-force verdicts for delta = 2 .. delta_max, index delta - 2.
std::vector<bool> dually_bch_sweep(const CosetPartition& part, i64 delta_max);

DistanceResult min_distance(const GaloisField& F, const CyclicCode& code, const DistanceOptions& opt = {});

std::string to_string(DistanceStatus s);

}  // namespace cyclo
