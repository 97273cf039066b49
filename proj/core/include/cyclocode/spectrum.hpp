#pragma once

#include "cyclocode/cosets.hpp"

#include <map>
#include <optional>
#include <set>

namespace cyclo {

struct SizeSpectrum {
    std::map<i64, BigInt> entries;  // tau -> N_tau, zero counts omitted
    int v = 0;
    i64 m0 = 0;
    i64 h = 0;

    BigInt weighted_total() const;  // sum of tau N_tau
};

bool operator==(const SizeSpectrum& a, const SizeSpectrum& b);

std::set<i64> possible_sizes(i64 n, i64 q);

// Throws std::domain_error if the Mobius sum is not divisible by tau.
BigInt count_by_size_general(i64 n, i64 q, i64 tau);

SizeSpectrum spectrum_general(const FamilyParams& fp);
SizeSpectrum spectrum_closed_form(const FamilyParams& fp);
SizeSpectrum spectrum_oracle(const CosetPartition& part);

// The lambda = q - 1 and lambda = 1 specialisations, written out separately.
std::optional<SizeSpectrum> spectrum_corollary(const FamilyParams& fp);

}  // namespace cyclo
