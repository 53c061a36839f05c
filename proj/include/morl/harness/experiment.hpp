#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "morl/agents/runners.hpp"
#include "morl/env/space_traders.hpp"

namespace morl {

// Fully resolved description of one multi-trial experiment. Field defaults
// are the standard setup: 20 trials of 20,000 episodes, alpha 0.01,
// lambda 0.95, gamma 1, temperature annealed 10 -> 2.
struct ExperimentSpec {
    std::string algorithm = "baseline-expected";
    std::string environment = "original";
    ChainSpec chain = default_extra_state_chain();
    long trials = 20;
    long episodes = 20000;
    std::uint64_t seed = 1;
    std::string out_dir;  // empty = keep results in memory only
    int jobs = 1;

    double alpha = 0.01;
    double alpha_final = 0.0001;
    bool decay = false;  // linear alpha -> alpha_final over the run
    double gamma = 1.0;
    double lambda = 0.95;
    double temp_initial = 10.0;
    double temp_final = 2.0;
    double epsilon = 0.05;
    long dd = 500;
    long dl = 1500;
    double grid = 0.1;
    double q_init = 0.0;

    AgentConfig agent_config() const;
    MomdpModel model() const { return make_environment(environment, chain); }
    void validate() const;

    bool operator==(const ExperimentSpec&) const = default;
};

std::vector<std::string> algorithm_ids();

struct TrialResult {
    int index = 0;
    std::uint64_t seed = 0;
    PolicyLabel final_label;
    std::vector<EpisodeRecord> log;

    bool operator==(const TrialResult&) const = default;
};

struct ExperimentSummary {
    std::map<PolicyLabel, long> counts;
    PolicyLabel oracle_label;
    std::vector<bool> matched;  // per trial, in index order
    double match_fraction = 0.0;
};

ExperimentSummary summarize(const std::vector<TrialResult>& results, const PolicyLabel& oracle);

// Runs the derived-seed trials (in parallel when jobs > 1), persists the
// per-trial logs, charts, summary and manifest when an output directory is
// set, and returns the summary. Trial results land in `results` when a sink
// is supplied.
ExperimentSummary run_experiment(const ExperimentSpec& spec,
                                 std::vector<TrialResult>* results = nullptr);

// Chart rows: (episode, label, label ordinal, above-threshold flag).
std::string policy_chart_csv(const MomdpModel& model, const TrialResult& result,
                             const std::vector<PolicyLabel>& satisfying);
std::string trial_log_csv(const TrialResult& result, const std::vector<PolicyLabel>& option_labels);
std::string summary_csv(const ExperimentSpec& spec, const ExperimentSummary& summary);

}  // namespace morl
