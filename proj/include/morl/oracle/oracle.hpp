#pragma once

#include <vector>

#include "morl/env/momdp.hpp"

namespace morl {

struct TrajectoryOutcome {
    Rational probability;
    RationalVector cumulative;
};

// Exact evaluation of one deterministic policy: every trajectory is
// expanded, so the mean return carries no sampling or rounding error.
struct PolicyEvaluation {
    PolicyLabel label;
    RationalVector mean_exact;
    Rational success_probability;  // mass of trajectories ending at the goal
    std::vector<TrajectoryOutcome> trajectories;

    RewardVector mean() const { return RewardVector(mean_exact); }
};

// All deterministic policies: the Cartesian product of action choices over
// decision states in index order. Single-action states contribute no letter.
std::vector<PolicyLabel> enumerate_policies(const MomdpModel& model);

// Maps a label to the chosen action per state (-1 for terminals).
std::vector<int> resolve_policy(const MomdpModel& model, const PolicyLabel& label);

PolicyEvaluation evaluate_policy(const MomdpModel& model, const PolicyLabel& label);
std::vector<PolicyEvaluation> evaluate_all(const MomdpModel& model);

// TLO-best policy by exact mean return; ties resolve to the lexically
// smallest label (the built-in models never tie).
PolicyLabel ser_optimal(const MomdpModel& model);
PolicyLabel ser_optimal(const MomdpModel& model, const RationalVector& thresholds);

// Labels whose exact mean first objective meets the threshold; the
// "above the line" set shown on policy charts.
std::vector<PolicyLabel> threshold_satisfying(const MomdpModel& model);

}  // namespace morl
