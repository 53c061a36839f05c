#include "morl/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "morl/harness/config_file.hpp"
#include "morl/oracle/oracle.hpp"

namespace morl {

namespace {

// Shortest round-trip decimal form; keeps CSVs byte-stable.
std::string fmt(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << body;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

std::vector<std::string> algorithm_ids() {
    return {"basic", "baseline-expected", "moss", "moss-two-phase", "options"};
}

AgentConfig ExperimentSpec::agent_config() const {
    AgentConfig cfg;
    cfg.alpha = decay ? Schedule::linear(alpha, alpha_final, episodes)
                      : Schedule::constant_value(alpha);
    cfg.gamma = gamma;
    cfg.lambda = lambda;
    cfg.temperature = temp_initial == temp_final
                          ? Schedule::constant_value(temp_initial)
                          : Schedule::linear(temp_initial, temp_final, episodes);
    cfg.episodes = episodes;
    cfg.epsilon = epsilon;
    cfg.data_episodes = dd;
    cfg.learn_episodes = dl;
    cfg.grid = grid;
    cfg.q_init = q_init;
    return cfg;
}

void ExperimentSpec::validate() const {
    auto algos = algorithm_ids();
    if (std::find(algos.begin(), algos.end(), algorithm) == algos.end())
        throw std::invalid_argument("unknown algorithm id: " + algorithm);
    auto envs = environment_ids();
    if (std::find(envs.begin(), envs.end(), environment) == envs.end())
        throw std::invalid_argument("unknown environment id: " + environment);
    if (trials <= 0) throw std::invalid_argument("trial count must be positive");
    if (jobs <= 0) throw std::invalid_argument("jobs must be positive");
    agent_config().validate();
}

ExperimentSummary summarize(const std::vector<TrialResult>& results, const PolicyLabel& oracle) {
    if (results.empty()) throw std::invalid_argument("summarize over no trials");
    ExperimentSummary summary;
    summary.oracle_label = oracle;
    long matches = 0;
    for (const auto& r : results) {
        ++summary.counts[r.final_label];
        bool ok = r.final_label == oracle;
        summary.matched.push_back(ok);
        if (ok) ++matches;
    }
    summary.match_fraction = static_cast<double>(matches) / static_cast<double>(results.size());
    return summary;
}

namespace {

TrialResult run_trial(const ExperimentSpec& spec, const MomdpModel& model, int index) {
    TrialResult out;
    out.index = index;
    out.seed = trial_seed(spec.seed, static_cast<std::uint64_t>(index));
    Rng rng(out.seed);
    AgentConfig cfg = spec.agent_config();
    if (spec.algorithm == "basic") {
        auto res = run_basic(model, cfg, rng);
        out.log = std::move(res.log.episodes);
        out.final_label = res.log.final_label;
    } else if (spec.algorithm == "baseline-expected") {
        auto res = run_baseline_expected(model, cfg, rng);
        out.log = std::move(res.log.episodes);
        out.final_label = res.log.final_label;
    } else if (spec.algorithm == "moss") {
        auto res = run_moss(model, cfg, rng);
        out.log = std::move(res.log.episodes);
        out.final_label = res.log.final_label;
    } else if (spec.algorithm == "moss-two-phase") {
        auto res = run_moss_two_phase(model, cfg, rng);
        out.log = std::move(res.log.episodes);
        out.final_label = res.log.final_label;
    } else if (spec.algorithm == "options") {
        auto res = run_options(model, all_policy_options(model), cfg, rng);
        out.log = std::move(res.log.episodes);
        out.final_label = res.log.final_label;
    } else {
        throw std::invalid_argument("unknown algorithm id: " + spec.algorithm);
    }
    return out;
}

}  // namespace

std::string trial_log_csv(const TrialResult& result,
                          const std::vector<PolicyLabel>& option_labels) {
    std::ostringstream out;
    out << "episode,greedy_label,return_obj1,return_obj2,alpha,temperature";
    for (const auto& label : option_labels)
        for (size_t o = 1; o <= 2; ++o) out << ",q_" << label << "_obj" << o;
    out << "\n";
    for (const auto& rec : result.log) {
        out << rec.episode << "," << rec.greedy;
        for (double c : rec.realized_return.components()) out << "," << fmt(c);
        out << "," << fmt(rec.alpha) << "," << fmt(rec.temperature);
        for (const auto& qv : rec.option_q)
            for (double c : qv.components()) out << "," << fmt(c);
        out << "\n";
    }
    return out.str();
}

std::string policy_chart_csv(const MomdpModel& model, const TrialResult& result,
                             const std::vector<PolicyLabel>& satisfying) {
    std::vector<PolicyLabel> order = enumerate_policies(model);
    std::ostringstream out;
    out << "episode,label,ordinal,above_threshold\n";
    for (const auto& rec : result.log) {
        auto it = std::find(order.begin(), order.end(), rec.greedy);
        long ordinal = it == order.end() ? -1 : it - order.begin();
        bool above =
            std::find(satisfying.begin(), satisfying.end(), rec.greedy) != satisfying.end();
        out << rec.episode << "," << rec.greedy << "," << ordinal << "," << (above ? 1 : 0)
            << "\n";
    }
    return out.str();
}

std::string summary_csv(const ExperimentSpec& spec, const ExperimentSummary& summary) {
    // Rows sorted by descending count, then label.
    std::vector<std::pair<PolicyLabel, long>> rows(summary.counts.begin(), summary.counts.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    std::ostringstream out;
    out << "algorithm,environment,label,count,oracle_optimal,match_fraction\n";
    for (const auto& [label, count] : rows)
        out << spec.algorithm << "," << spec.environment << "," << label << "," << count << ","
            << summary.oracle_label << "," << fmt(summary.match_fraction) << "\n";
    return out.str();
}

ExperimentSummary run_experiment(const ExperimentSpec& spec, std::vector<TrialResult>* results) {
    spec.validate();
    const MomdpModel model = spec.model();
    const PolicyLabel oracle = ser_optimal(model);
    const std::vector<PolicyLabel> satisfying = threshold_satisfying(model);
    const std::vector<PolicyLabel> option_labels =
        spec.algorithm == "options" ? enumerate_policies(model) : std::vector<PolicyLabel>{};

    std::vector<TrialResult> trials(spec.trials);
    const int jobs = static_cast<int>(std::min<long>(spec.jobs, spec.trials));
    if (jobs <= 1) {
        for (long k = 0; k < spec.trials; ++k)
            trials[k] = run_trial(spec, model, static_cast<int>(k));
    } else {
        std::atomic<long> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&]() {
                while (true) {
                    long k = next.fetch_add(1);
                    if (k >= spec.trials) return;
                    trials[k] = run_trial(spec, model, static_cast<int>(k));
                }
            });
        }
        for (auto& t : workers) t.join();
    }

    ExperimentSummary summary = summarize(trials, oracle);

    if (!spec.out_dir.empty()) {
        std::filesystem::path dir(spec.out_dir);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw std::runtime_error("cannot create output directory " + dir.string());
        for (const auto& trial : trials) {
            write_file(dir / ("trial_" + std::to_string(trial.index) + "_log.csv"),
                       trial_log_csv(trial, option_labels));
            write_file(dir / ("chart_" + std::to_string(trial.index) + ".csv"),
                       policy_chart_csv(model, trial, satisfying));
        }
        write_file(dir / "summary.csv", summary_csv(spec, summary));
        write_file(dir / "manifest.txt", manifest_text(spec, "ok"));
    }
    if (results) *results = std::move(trials);
    return summary;
}

}  // namespace morl
