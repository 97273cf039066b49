#pragma once

#include "cyclocode/cosets.hpp"

#include <optional>
#include <vector>

namespace cyclo {

struct LcdReport {
    FamilyParams params;
    std::vector<i64> Gamma;
    std::vector<i64> Pi;
    std::vector<i64> removed;
    i64 pi_size_bruteforce = 0;
    std::optional<BigInt> pi_size_closed_form;
    BigInt count;  // 2^|Pi| - 1
};

// Pi = Gamma minus max(gamma, Ld(n - gamma)) for non-self-negating gamma.
LcdReport pi_set(const CosetPartition& part);
LcdReport pi_set(const FamilyParams& fp);

// Throws std::domain_error if a printed case yields a non-integer.
BigInt pi_size_closed_form(const FamilyParams& fp);

// lambda = q - 1 with q odd (resp. even) and m an odd prime; absent otherwise.
std::optional<BigInt> pi_size_corollary(const FamilyParams& fp);

BigInt lcd_count(const FamilyParams& fp);

}  // namespace cyclo
