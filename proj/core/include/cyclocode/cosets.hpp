#pragma once

#include "cyclocode/numtheory.hpp"

#include <optional>
#include <vector>

namespace cyclo {

// n = lambda (q^m + 1) with lambda | q - 1.
struct FamilyParams {
    i64 q = 0;
    i64 m = 0;
    i64 lambda = 0;
    i64 M = 0;  // q^m + 1
    i64 n = 0;
    PrimePower pp;

    // Validates every invariant; throws std::invalid_argument.
    static FamilyParams make(i64 q, i64 m, i64 lambda);
};

bool operator==(const FamilyParams& a, const FamilyParams& b);

struct Coset {
    i64 leader = 0;
    i64 size = 0;
    std::vector<i64> elements;  // gamma, gamma q, gamma q^2, ...
    i64 residue_a = 0;          // 0 outside a family context
};

// a in [1, lambda] with gamma = a (mod lambda).
i64 residue_a(const FamilyParams& fp, i64 gamma);

Coset coset(const FamilyParams& fp, i64 gamma);
Coset coset(i64 n, i64 q, i64 gamma);
i64 leader_of(const FamilyParams& fp, i64 gamma);

class CosetPartition {
public:
    CosetPartition(i64 n, i64 q);
    explicit CosetPartition(const FamilyParams& fp);

    i64 n() const { return n_; }
    i64 q() const { return q_; }
    const std::optional<FamilyParams>& params() const { return params_; }

    // Sorted by leader; each coset lists elements starting from its leader.
    const std::vector<Coset>& cosets() const { return cosets_; }
    std::vector<i64> leaders() const;
    i64 leader_of(i64 gamma) const { return cosets_[index_[gamma]].leader; }
    const Coset& coset_of(i64 gamma) const { return cosets_[index_[gamma]]; }
    std::size_t index_of(i64 gamma) const { return index_[gamma]; }
    bool same_coset(i64 x, i64 y) const { return index_[x] == index_[y]; }

private:
    void build(i64 lambda);

    i64 n_;
    i64 q_;
    std::optional<FamilyParams> params_;
    std::vector<Coset> cosets_;
    std::vector<std::uint32_t> index_;
};

i64 reflect(const FamilyParams& fp, i64 gamma);

// The overline map applied to gamma q^t.
i64 fold(const FamilyParams& fp, i64 gamma, i64 t);

// min over t in [0, max(1, tau/2)) of fold(gamma, t) equals the leader.
bool half_period_fold_holds(const FamilyParams& fp, i64 gamma);

enum class Mode { bruteforce, closed_form };

bool negation_in_same_coset(const FamilyParams& fp, i64 gamma, Mode mode);
bool negation_in_same_coset(const CosetPartition& part, i64 gamma);

}  // namespace cyclo
