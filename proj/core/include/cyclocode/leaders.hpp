#pragma once

#include "cyclocode/cosets.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclo {

enum class EVariant { statement, proof };

enum class FamilyId { E1, E2_1, E2_2, E2_3, E3_1, E3_2, CASE2_2 };

std::string to_string(FamilyId f);
std::string to_string(EVariant v);
EVariant parse_variant(const std::string& s);

struct ExclusionFamily {
    FamilyId family_id = FamilyId::E1;
    i64 t = 0;
    i64 A = 0;
    i64 B = 0;  // unused by E1
    i64 a = 0;
    i64 value = 0;
};

enum class LeaderReason { range_violation, excluded, leader };

struct LeaderVerdict {
    i64 gamma = 0;
    bool is_leader = false;
    LeaderReason reason = LeaderReason::leader;
    std::optional<ExclusionFamily> witness;
    std::optional<bool> oracle_agrees;
};

struct GuaranteedRange {
    i64 gamma_max = 0;
    i64 size = 0;
    std::vector<std::pair<i64, i64>> exceptions;  // (gamma, coset size)
};

struct ExtremalLeaders {
    i64 delta1 = 0;
    i64 delta1_coset_size = 0;
    std::optional<i64> delta2;
    std::optional<i64> delta2_coset_size;
};

bool in_condition_one(const FamilyParams& fp, i64 gamma);

std::optional<ExclusionFamily> is_excluded(const FamilyParams& fp, i64 gamma, EVariant variant);

LeaderVerdict is_leader_closed_form(const FamilyParams& fp, i64 gamma, EVariant variant);

// Throws std::domain_error for m = 1.
GuaranteedRange guaranteed_leader_range(const FamilyParams& fp);

// Throws std::domain_error for even m.
ExtremalLeaders extremal_leaders(const FamilyParams& fp);

// Open interval; throws std::domain_error for even m.
std::pair<i64, i64> proposition_range_nonleaders(i64 q, i64 m);

}  // namespace cyclo
