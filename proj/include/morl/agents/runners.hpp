#pragma once

#include <vector>

#include "morl/agents/config.hpp"
#include "morl/agents/global_stats.hpp"
#include "morl/agents/qtable.hpp"
#include "morl/core/exploration.hpp"
#include "morl/env/momdp.hpp"

namespace morl {

// One row per training episode; the series policy charts and Q-trace plots
// are drawn from. The greedy label is sampled after the episode's final
// update. Option agents also snapshot the per-option Q vectors at the
// initial state.
struct EpisodeRecord {
    long episode = 0;
    PolicyLabel greedy;
    RewardVector realized_return;
    double alpha = 0.0;
    double temperature = 0.0;
    std::vector<RewardVector> option_q;

    bool operator==(const EpisodeRecord&) const = default;
};

struct TrainLog {
    std::vector<EpisodeRecord> episodes;
    PolicyLabel final_label;

    bool operator==(const TrainLog&) const = default;
};

struct BasicResult {
    QTable q;
    TrainLog log;
};

struct BaselineResult {
    QTable q;
    ITable immediate;
    TrainLog log;
};

struct MossResult {
    QTable q;
    GlobalStats stats;
    TrainLog log;
};

// A temporally extended action that fixes the choice at every decision
// state until episode end.
struct PolicyOption {
    PolicyLabel label;
    std::vector<int> action_by_state;  // -1 for terminals
};

struct OptionsResult {
    QTable q;
    std::vector<PolicyOption> options;
    std::vector<long> option_episodes;  // episodes in which each option ran
    TrainLog log;
};

// Q(lambda) on augmented states keyed by the actual accumulated reward.
BasicResult run_basic(const MomdpModel& model, const AgentConfig& config, Rng& rng);

// Q(lambda) on augmented states keyed by accumulated *expected* immediate
// rewards, learned as exact sample means.
BaselineResult run_baseline_expected(const MomdpModel& model, const AgentConfig& config, Rng& rng);

// Q(lambda) whose action values blend local Q with global visit statistics.
MossResult run_moss(const MomdpModel& model, const AgentConfig& config, Rng& rng);

// Alternates greedy data-gathering episodes (statistics refreshed from
// scratch) with learning episodes run against the frozen statistics.
MossResult run_moss_two_phase(const MomdpModel& model, const AgentConfig& config, Rng& rng);

// One pre-defined option per deterministic policy, followed to termination;
// requires the options to cover every deterministic policy of the model.
OptionsResult run_options(const MomdpModel& model, std::vector<PolicyOption> options,
                          const AgentConfig& config, Rng& rng);

std::vector<PolicyOption> all_policy_options(const MomdpModel& model);

// Greedy policy labels, rolled forward from the initial state along the
// success route using each agent's own value construction.
PolicyLabel actual_return_greedy_label(const MomdpModel& model, const QTable& q, double grid);
PolicyLabel expected_return_greedy_label(const MomdpModel& model, const QTable& q,
                                         const ITable& immediate, double grid);
PolicyLabel holistic_greedy_label(const MomdpModel& model, const QTable& q,
                                  const GlobalStats& stats, std::optional<double> epsilon,
                                  double grid);
PolicyLabel options_greedy_label(const MomdpModel& model, const QTable& q,
                                 const std::vector<PolicyOption>& options);

}  // namespace morl
