#pragma once

#include <span>
#include <vector>

#include "morl/core/random.hpp"
#include "morl/core/reward_vector.hpp"
#include "morl/core/tlo.hpp"

namespace morl {

// Dense ranks under the TLO ordering: rank 0 is best, equivalent values
// share a rank, and each strictly worse equivalence class takes the next
// rank.
std::vector<int> tlo_ranks(std::span<const RewardVector> values, const TloUtility& u);

// Selection probabilities of rank-based softmax: p_i proportional to
// exp(-rank_i / temperature).
std::vector<double> softmax_rank_probabilities(std::span<const RewardVector> values,
                                               const TloUtility& u, double temperature);

size_t softmax_rank_select(std::span<const RewardVector> values, const TloUtility& u,
                           double temperature, Rng& rng);

}  // namespace morl
