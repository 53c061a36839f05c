#pragma once

#include <compare>
#include <span>
#include <vector>

#include "morl/core/rational.hpp"
#include "morl/core/reward_vector.hpp"

namespace morl {

// Thresholded lexicographic ordering over reward vectors: objectives
// 1..n-1 are clipped at their thresholds, the final objective is left
// unthresholded, and clipped vectors compare lexicographically.
struct TloUtility {
    std::vector<double> thresholds;  // one per objective except the last

    size_t objectives() const { return thresholds.size() + 1; }

    static TloUtility single(double t1) { return TloUtility{{t1}}; }
};

RewardVector tlo_clip(const RewardVector& v, const TloUtility& u);
std::weak_ordering tlo_compare(const RewardVector& a, const RewardVector& b, const TloUtility& u);

// All indices whose value is maximal under tlo_compare. Deterministic
// consumers break ties by taking the lowest index (tlo_best).
std::vector<size_t> tlo_argmax(std::span<const RewardVector> values, const TloUtility& u);
size_t tlo_best(std::span<const RewardVector> values, const TloUtility& u);

// Exact counterparts used by the oracle.
RationalVector tlo_clip_exact(const RationalVector& v, const RationalVector& thresholds);
std::weak_ordering tlo_compare_exact(const RationalVector& a, const RationalVector& b,
                                     const RationalVector& thresholds);

}  // namespace morl
