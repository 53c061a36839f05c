#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "morl/env/model_io.hpp"
#include "morl/harness/config_file.hpp"
#include "morl/harness/presets.hpp"
#include "morl/oracle/oracle.hpp"

namespace {

int cmd_oracle(const std::string& env_id, const std::string& threshold, const std::string& csv) {
    morl::MomdpModel model = morl::make_environment(env_id);
    morl::RationalVector thresholds = model.thresholds_exact();
    if (!threshold.empty()) thresholds = {morl::Rational::from_decimal(threshold)};

    auto evals = morl::evaluate_all(model);
    morl::PolicyLabel best = morl::ser_optimal(model, thresholds);

    std::cout << "environment: " << model.id() << "   threshold:";
    for (const auto& t : thresholds) std::cout << " " << t.str();
    std::cout << "\n\n";
    std::cout << std::left << std::setw(8) << "policy" << std::setw(20) << "mean_return"
              << std::setw(20) << "clipped" << "optimal\n";
    std::ostringstream csv_body;
    csv_body << "label,mean_obj1,mean_obj2,clip_obj1,clip_obj2,optimal\n";
    for (const auto& e : evals) {
        morl::RationalVector clipped = morl::tlo_clip_exact(e.mean_exact, thresholds);
        std::cout << std::left << std::setw(8) << e.label << std::setw(20)
                  << morl::str(e.mean_exact) << std::setw(20) << morl::str(clipped)
                  << (e.label == best ? "*" : "") << "\n";
        csv_body << e.label << "," << e.mean_exact[0].str() << "," << e.mean_exact[1].str() << ","
                 << clipped[0].str() << "," << clipped[1].str() << ","
                 << (e.label == best ? 1 : 0) << "\n";
    }
    if (!csv.empty()) {
        std::ofstream out(csv);
        if (!out) throw std::runtime_error("cannot write " + csv);
        out << csv_body.str();
    }
    return 0;
}

int cmd_list() {
    std::cout << "environments:\n";
    for (const auto& id : morl::environment_ids()) std::cout << "  " << id << "\n";
    std::cout << "algorithms:\n";
    for (const auto& id : morl::algorithm_ids()) std::cout << "  " << id << "\n";
    std::cout << "presets:\n";
    for (const auto& id : morl::preset_ids()) {
        morl::ExperimentSpec spec = morl::preset(id);
        std::cout << "  " << std::left << std::setw(24) << id << spec.algorithm << " / "
                  << spec.environment << (spec.decay ? " (decayed alpha)" : "") << "\n";
    }
    return 0;
}

int cmd_emit_env(const std::string& env_id, const std::string& out_path) {
    morl::MomdpModel model = morl::make_environment(env_id);
    if (out_path.empty())
        std::cout << morl::save_model(model);
    else
        morl::save_model_file(model, out_path);
    return 0;
}

struct RunArgs {
    std::string config;
    std::string env, algorithm;
    std::uint64_t seed = 0;
    long trials = -1, episodes = -1, dd = -1, dl = -1;
    double alpha = -1.0, alpha_final = -1.0, epsilon = -1.0;
    int jobs = -1;
    bool decay = false, no_decay = false;
    std::string out;
    bool seed_set = false;
};

morl::ExperimentSpec resolve_spec(const RunArgs& args) {
    morl::ExperimentSpec spec;
    if (args.config.rfind("preset:", 0) == 0)
        spec = morl::preset(args.config.substr(7));
    else
        spec = morl::load_spec_file(args.config);
    // Flag overrides beat config-file values.
    if (!args.env.empty()) spec.environment = args.env;
    if (!args.algorithm.empty()) spec.algorithm = args.algorithm;
    if (args.seed_set) spec.seed = args.seed;
    if (args.trials >= 0) spec.trials = args.trials;
    if (args.episodes >= 0) spec.episodes = args.episodes;
    if (args.alpha >= 0) spec.alpha = args.alpha;
    if (args.alpha_final >= 0) spec.alpha_final = args.alpha_final;
    if (args.decay) spec.decay = true;
    if (args.no_decay) spec.decay = false;
    if (args.epsilon >= 0) spec.epsilon = args.epsilon;
    if (args.dd >= 0) spec.dd = args.dd;
    if (args.dl >= 0) spec.dl = args.dl;
    if (args.jobs >= 0) spec.jobs = args.jobs;
    if (!args.out.empty()) spec.out_dir = args.out;
    if (spec.out_dir.empty()) spec.out_dir = "runs/" + spec.algorithm + "-" + spec.environment;
    return spec;
}

int cmd_run(const RunArgs& args) {
    morl::ExperimentSpec spec = resolve_spec(args);
    spec.validate();
    try {
        morl::ExperimentSummary summary = morl::run_experiment(spec);
        std::cout << "environment " << spec.environment << ", algorithm " << spec.algorithm
                  << ", " << spec.trials << " trials x " << spec.episodes << " episodes\n";
        std::cout << "oracle-optimal policy: " << summary.oracle_label << "\n";
        std::cout << "final policies:";
        for (const auto& [label, count] : summary.counts)
            std::cout << "  " << label << " x" << count;
        std::cout << "\nmatch fraction: " << summary.match_fraction << "\n";
        std::cout << "artifacts in " << spec.out_dir << "\n";
        return 0;
    } catch (const std::exception& e) {
        // Leave a failure note beside whatever partial artifacts exist.
        std::error_code ec;
        std::filesystem::create_directories(spec.out_dir, ec);
        if (!ec) {
            std::ofstream manifest(std::filesystem::path(spec.out_dir) / "manifest.txt");
            manifest << morl::manifest_text(spec, std::string("failed: ") + e.what());
        }
        throw;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tabular multi-objective RL lab: Space Traders environments, TLO agents, "
                 "exact policy oracle, seeded experiment runner"};
    app.require_subcommand(1);

    auto* oracle = app.add_subcommand("oracle", "Evaluate all deterministic policies exactly");
    std::string oracle_env;
    std::string oracle_threshold;
    std::string oracle_csv;
    oracle->add_option("environment", oracle_env, "Environment id")->required();
    oracle->add_option("--threshold", oracle_threshold, "Override the first-objective threshold");
    oracle->add_option("--csv", oracle_csv, "Also write the table to a CSV file");

    auto* run = app.add_subcommand("run", "Run a multi-trial experiment");
    RunArgs args;
    run->add_option("config", args.config, "Config file path or preset:NAME")->required();
    run->add_option("--env", args.env, "Environment id override");
    run->add_option("--algorithm", args.algorithm, "Algorithm id override");
    auto* seed_opt = run->add_option("--seed", args.seed, "Master seed");
    run->add_option("--trials", args.trials, "Trial count");
    run->add_option("--episodes", args.episodes, "Episodes per trial");
    run->add_option("--alpha", args.alpha, "Learning rate (initial)");
    run->add_option("--alpha-final", args.alpha_final, "Learning rate at the end of a decayed run");
    run->add_flag("--decay", args.decay, "Decay alpha linearly to --alpha-final");
    run->add_flag("--no-decay", args.no_decay, "Force a constant alpha");
    run->add_option("--epsilon", args.epsilon, "Probability-weight floor (two-phase MOSS)");
    run->add_option("--dd", args.dd, "Data-gathering phase length");
    run->add_option("--dl", args.dl, "Learning phase length");
    run->add_option("--jobs", args.jobs, "Concurrent trials");
    run->add_option("--out", args.out, "Output directory");

    auto* list = app.add_subcommand("list", "List environments, algorithms and presets");

    auto* emit = app.add_subcommand("emit-env", "Write a built-in environment as a model file");
    std::string emit_env;
    std::string emit_out;
    emit->add_option("environment", emit_env, "Environment id")->required();
    emit->add_option("--out", emit_out, "Output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (oracle->parsed()) return cmd_oracle(oracle_env, oracle_threshold, oracle_csv);
        if (run->parsed()) {
            args.seed_set = seed_opt->count() > 0;
            return cmd_run(args);
        }
        if (list->parsed()) return cmd_list();
        if (emit->parsed()) return cmd_emit_env(emit_env, emit_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
