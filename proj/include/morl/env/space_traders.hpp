#pragma once

#include <vector>

#include "morl/env/momdp.hpp"

namespace morl {

// One hop of a multi-leg route. The first leg sits at state A (replacing its
// Direct action); each further leg adds an intermediate state. When
// `failure_penalty` is set, the failure reward's first objective receives an
// extra -1, matching the reward-design failure signal.
struct ChainLeg {
    std::string action;
    Rational success_probability;
    RationalVector success_reward;
    RationalVector failure_reward;
    bool failure_penalty = false;

    bool operator==(const ChainLeg&) const = default;
};

struct ChainSpec {
    std::vector<ChainLeg> legs;

    bool operator==(const ChainSpec&) const = default;
};

// Two-decision-state delivery task: travel A -> B -> goal, maximising the
// success probability (objective 1) while minimising the time penalty
// (objective 2). Success threshold 0.88.
MomdpModel space_traders_original();

// Same topology, but failures pay -1 on the first objective and the goal
// pays +1, shifting the threshold to 0.76.
MomdpModel space_traders_reward_design();

// Original rewards with the time penalties of states A and B swapped, which
// moves the optimal policy from DI to ID. Threshold 0.88.
MomdpModel space_traders_swapped();

// Reward-design variant whose Direct action at A runs through intermediate
// states per `spec`. The default chain reproduces the designed failure case:
// zero expected first-objective accumulation on reaching B.
MomdpModel space_traders_extra_state(const ChainSpec& spec);

ChainSpec default_extra_state_chain();

// Registry used by the CLI and harness.
std::vector<std::string> environment_ids();
MomdpModel make_environment(const std::string& id, const ChainSpec& chain);
MomdpModel make_environment(const std::string& id);

}  // namespace morl
