#pragma once

#include <optional>
#include <vector>

#include "morl/agents/qtable.hpp"
#include "morl/core/reward_vector.hpp"
#include "morl/env/momdp.hpp"

namespace morl {

struct StateStats {
    RewardVector episode_return;  // E(s): mean return over episodes visiting s
    RewardVector arrival;         // P(s): mean accumulated reward on reaching s
    long visits = 0;              // v(s): episodes in which s was visited
    bool seen = false;            // b(s): visited in the current episode
};

// Global visit statistics blended into action values so that selection
// accounts for episodes in which the current state is never reached.
struct GlobalStats {
    RewardVector mean_return;  // E_pi
    long episodes = 0;         // v_pi
    std::vector<StateStats> state;

    GlobalStats() = default;
    GlobalStats(int objectives, int n_states)
        : mean_return(objectives),
          state(n_states, StateStats{RewardVector(static_cast<size_t>(objectives)),
                                     RewardVector(static_cast<size_t>(objectives)), 0, false}) {}

    void begin_episode() {
        ++episodes;
        for (auto& st : state) st.seen = false;
    }

    void end_episode(const RewardVector& episode_return, double alpha) {
        mean_return += alpha * (episode_return - mean_return);
        for (auto& st : state)
            if (st.seen) st.episode_return += alpha * (episode_return - st.episode_return);
    }
};

struct HolisticValues {
    AugKey key;
    std::vector<RewardVector> utilities;  // one per action of the state
};

// On-arrival statistics update plus the holistic action values: marks the
// visit, smooths P(s) toward the episode accumulation, and blends
// P(s)+Q(s^A,a) with the estimated return of episodes that miss s. The
// blending weight is p(s) = v(s)/v_pi, floored at epsilon when given.
// The augmented Q key uses the episode's actual accumulation, which is
// stable per route; the smoothed P(s) is an EWMA whose wander would
// otherwise spread each state's estimates over many quantization cells.
// Requires at least one started episode.
HolisticValues update_statistics(GlobalStats& stats, QTable& q, const MomdpModel& model, int s,
                                 const RewardVector& accumulated, double alpha,
                                 std::optional<double> epsilon, double grid);

// Read-only variant used while statistics are frozen (two-phase learning
// episodes and greedy rollouts): same value construction, no mutation.
HolisticValues holistic_values(const GlobalStats& stats, const QTable& q, const MomdpModel& model,
                               int s, const RewardVector& accumulated,
                               std::optional<double> epsilon, double grid);

}  // namespace morl
