// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exits non-zero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "morl/harness/config_file.hpp"
#include "morl/harness/experiment.hpp"
#include "morl/oracle/oracle.hpp"

using namespace morl;

namespace {

constexpr std::uint64_t kMasterSeed = 20221101;
constexpr int kJobs = 4;

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

ExperimentSpec spec_for(const std::string& algorithm, const std::string& environment, bool decay) {
    ExperimentSpec spec;
    spec.algorithm = algorithm;
    spec.environment = environment;
    spec.decay = decay;
    spec.seed = kMasterSeed;
    spec.jobs = kJobs;
    return spec;
}

long count_of(const ExperimentSummary& s, const PolicyLabel& label) {
    auto it = s.counts.find(label);
    return it == s.counts.end() ? 0 : it->second;
}

bool is_modal(const ExperimentSummary& s, const PolicyLabel& label) {
    long n = count_of(s, label);
    for (const auto& [other, count] : s.counts)
        if (other != label && count > n) return false;
    return n > 0;
}

std::string counts_text(const ExperimentSummary& s) {
    std::string out;
    for (const auto& [label, count] : s.counts)
        out += label + ":" + std::to_string(count) + " ";
    return out;
}

RationalVector rv(const char* a, const char* b) {
    return {Rational::from_decimal(a), Rational::from_decimal(b)};
}

void check_oracle_table(Check& c, const MomdpModel& model,
                        const std::map<PolicyLabel, RationalVector>& expected,
                        const PolicyLabel& optimal) {
    auto evals = evaluate_all(model);
    c.expect(evals.size() == expected.size(), "policy count mismatch");
    for (const auto& e : evals) {
        auto it = expected.find(e.label);
        if (it == expected.end()) {
            c.expect(false, "unexpected policy " + e.label);
            continue;
        }
        if (!(e.mean_exact == it->second))
            c.expect(false, e.label + " mean " + str(e.mean_exact) + " != " + str(it->second));
    }
    PolicyLabel best = ser_optimal(model);
    c.expect(best == optimal, "optimal " + best + " != " + optimal);
}

// ---------------------------------------------------------------------------

Check criterion_oracle_original(double& seconds) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    check_oracle_table(c, space_traders_original(),
                       {{"II", rv("1", "-22")},
                        {"ID", rv("0.9", "-19.9")},
                        {"IT", rv("0.85", "-12")},
                        {"DI", rv("0.9", "-14.5")},
                        {"DD", rv("0.81", "-12.61")},
                        {"DT", rv("0.765", "-5.5")},
                        {"TI", rv("0.85", "-8.5")},
                        {"TD", rv("0.765", "-6.715")},
                        {"TT", rv("0.7225", "0")}},
                       "DI");
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(seconds < 1.0, "runtime over 1 s");
    return c;
}

Check criterion_oracle_swapped(double& seconds) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    check_oracle_table(c, space_traders_swapped(),
                       {{"II", rv("1", "-22")},
                        {"ID", rv("0.9", "-15.5")},
                        {"IT", rv("0.85", "-10")},
                        {"DI", rv("0.9", "-18.7")},
                        {"DD", rv("0.81", "-12.85")},
                        {"DT", rv("0.765", "-7.9")},
                        {"TI", rv("0.85", "-10.2")},
                        {"TD", rv("0.765", "-4.675")},
                        {"TT", rv("0.7225", "0")}},
                       "ID");
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(seconds < 1.0, "runtime over 1 s");
    return c;
}

Check criterion_simulator_consistency(double& seconds) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    const int n = 1000000;
    Rng rng(kMasterSeed);
    for (const auto& id : environment_ids()) {
        MomdpModel m = make_environment(id);
        for (int s = 0; s < m.state_count(); ++s) {
            for (int a = 0; a < m.action_count(s); ++a) {
                RationalVector mean(m.objectives(), Rational(0));
                for (const auto& o : m.state(s).actions[a].outcomes)
                    mean += o.probability * o.reward;
                RewardVector sum(m.objectives());
                for (int i = 0; i < n; ++i) sum += m.step(s, a, rng).reward;
                for (int o = 0; o < m.objectives(); ++o) {
                    double mu = mean[o].to_double();
                    double var = 0.0;
                    for (const auto& out : m.state(s).actions[a].outcomes) {
                        double r = out.reward[o].to_double();
                        var += out.probability.to_double() * (r - mu) * (r - mu);
                    }
                    double tol = var == 0.0 ? 1e-12 : 4.0 * std::sqrt(var / n);
                    if (std::abs(sum[o] / n - mu) > tol)
                        c.expect(false, id + " " + m.state(s).name + "/" +
                                            m.state(s).actions[a].name + " obj" +
                                            std::to_string(o + 1) + " off by " +
                                            std::to_string(std::abs(sum[o] / n - mu)));
                }
            }
        }
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(seconds < 30.0, "runtime over 30 s");
    return c;
}

Check criterion_baseline_constant(double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentSummary s = run_experiment(spec_for("baseline-expected", "original", false));
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Check c;
    c.detail = counts_text(s);
    c.expect(is_modal(s, "ID"), "ID not modal");
    c.expect(count_of(s, "DI") <= 5, "DI over 5");
    c.expect(seconds < 120.0, "runtime over 2 min");
    return c;
}

Check criterion_baseline_decayed(double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentSummary s = run_experiment(spec_for("baseline-expected", "original", true));
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Check c;
    c.detail = counts_text(s);
    c.expect(count_of(s, "ID") >= 18, "ID below 18/20");
    return c;
}

Check criterion_reward_design(double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentSummary s = run_experiment(spec_for("baseline-expected", "reward-design", false));
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Check c;
    c.detail = counts_text(s);
    c.expect(is_modal(s, "DI"), "DI not modal");
    c.expect(count_of(s, "DI") >= 6, "DI below 6/20");
    return c;
}

Check criterion_extra_state(double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentSummary s = run_experiment(spec_for("baseline-expected", "extra-state", false));
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Check c;
    c.detail = counts_text(s);
    c.expect(count_of(s, "DI") <= 2, "DI over 2");
    c.expect(is_modal(s, "ID"), "ID not modal");
    return c;
}

Check criterion_moss_constant(double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentSummary s = run_experiment(spec_for("moss", "original", false));
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Check c;
    c.detail = counts_text(s);
    c.expect(is_modal(s, "DI"), "DI not modal");
    c.expect(count_of(s, "DI") >= 10, "DI below 10/20");
    return c;
}

Check criterion_moss_decayed(double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentSummary s = run_experiment(spec_for("moss", "original", true));
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Check c;
    c.detail = counts_text(s);
    c.expect(count_of(s, "DI") >= 18, "DI below 18/20");
    return c;
}

Check criterion_moss_swapped(double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentSummary constant = run_experiment(spec_for("moss", "swapped", false));
    ExperimentSummary decayed = run_experiment(spec_for("moss", "swapped", true));
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Check c;
    c.detail = "constant " + counts_text(constant) + "| decayed " + counts_text(decayed);
    c.expect(count_of(constant, "ID") <= 1, "constant-alpha ID over 1");
    c.expect(count_of(decayed, "ID") <= 1, "decayed-alpha ID over 1");
    return c;
}

Check criterion_two_phase(double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentSummary original = run_experiment(spec_for("moss-two-phase", "original", false));
    ExperimentSummary swapped = run_experiment(spec_for("moss-two-phase", "swapped", false));
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Check c;
    c.detail = "original " + counts_text(original) + "| swapped " + counts_text(swapped);
    c.expect(is_modal(original, "DI"), "original DI not modal");
    c.expect(count_of(original, "DI") >= 8, "original DI below 8/20");
    c.expect(count_of(swapped, "ID") <= 12, "swapped ID over 12");
    return c;
}

Check criterion_options_constant(double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    ExperimentSummary s = run_experiment(spec_for("options", "original", false));
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Check c;
    c.detail = counts_text(s);
    c.expect(is_modal(s, "DI"), "DI not modal");
    c.expect(count_of(s, "DI") >= 9, "DI below 9/20");
    return c;
}

Check criterion_options_decayed(double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    MomdpModel m = space_traders_original();
    auto evals = evaluate_all(m);
    ExperimentSpec spec = spec_for("options", "original", true);
    AgentConfig cfg = spec.agent_config();
    Check c;
    long di = 0;
    for (long k = 0; k < spec.trials; ++k) {
        Rng rng(trial_seed(spec.seed, static_cast<std::uint64_t>(k)));
        OptionsResult res = run_options(m, all_policy_options(m), cfg, rng);
        if (res.log.final_label == "DI") ++di;
        const auto& final_q = res.log.episodes.back().option_q;
        for (size_t i = 0; i < res.options.size(); ++i) {
            if (res.option_episodes[i] < 500) continue;
            RewardVector target = evals[i].mean();
            if (std::abs(final_q[i][0] - target[0]) > 0.03)
                c.expect(false, "trial " + std::to_string(k) + " " + res.options[i].label +
                                    " obj1 off by " +
                                    std::to_string(std::abs(final_q[i][0] - target[0])));
            if (std::abs(final_q[i][1] - target[1]) > 1.0)
                c.expect(false, "trial " + std::to_string(k) + " " + res.options[i].label +
                                    " obj2 off by " +
                                    std::to_string(std::abs(final_q[i][1] - target[1])));
        }
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.detail = "DI " + std::to_string(di) + "/20 " + c.detail;
    c.expect(di >= 18, "DI below 18/20");
    return c;
}

// Criterion 14: no-learning property suite.
Check criterion_properties(double& seconds) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    const TloUtility u = TloUtility::single(0.88);
    Rng rng(kMasterSeed);
    auto random_vec = [&rng]() {
        static const double pool[] = {-22, -14.5, -12, -1, 0, 0.765, 0.85, 0.88, 0.9, 1};
        return RewardVector{pool[rng.next() % 10], pool[rng.next() % 10]};
    };

    // Total preorder laws and clip idempotence on 1e4 random triples.
    for (int i = 0; i < 10000 && c.ok; ++i) {
        RewardVector a = random_vec(), b = random_vec(), d = random_vec();
        c.expect(tlo_compare(a, a, u) == std::weak_ordering::equivalent, "reflexivity");
        auto ab = tlo_compare(a, b, u);
        auto ba = tlo_compare(b, a, u);
        c.expect((ab == std::weak_ordering::greater) == (ba == std::weak_ordering::less),
                 "antisymmetry consistency");
        c.expect((ab == std::weak_ordering::equivalent) == (ba == std::weak_ordering::equivalent),
                 "equivalence symmetry");
        auto bd = tlo_compare(b, d, u);
        auto ad = tlo_compare(a, d, u);
        if (ab != std::weak_ordering::less && bd != std::weak_ordering::less)
            c.expect(ad != std::weak_ordering::less, "transitivity");
        RewardVector clipped = tlo_clip(a, u);
        c.expect(tlo_clip(clipped, u) == clipped, "clip idempotence");
    }

    // Stats identity to 1e-12 on 1e4 random instantiations.
    MomdpModel m = space_traders_original();
    QTable q(2, 0.0);
    for (int i = 0; i < 10000 && c.ok; ++i) {
        GlobalStats stats(2, m.state_count());
        stats.episodes = 2 + static_cast<long>(rng.next() % 1000);
        stats.mean_return = RewardVector{rng.uniform01() * 2 - 1, -20 * rng.uniform01()};
        stats.state[1].visits = 1 + static_cast<long>(rng.next() % (stats.episodes - 1));
        stats.state[1].seen = true;
        stats.state[1].episode_return = RewardVector{rng.uniform01(), -25 * rng.uniform01()};
        stats.state[1].arrival = RewardVector{rng.uniform01(), -12 * rng.uniform01()};
        HolisticValues hv = update_statistics(stats, q, m, 1, stats.state[1].arrival,
                                              rng.uniform01(), std::nullopt, 0.1);
        double p = double(stats.state[1].visits) / double(stats.episodes);
        for (int o = 0; o < 2; ++o) {
            double x = stats.state[1].arrival[o] + q.value_or_init(hv.key, 0)[o];
            double off = (hv.utilities[0][o] - p * x) / (1 - p);
            double identity = p * stats.state[1].episode_return[o] + (1 - p) * off;
            c.expect(std::abs(identity - stats.mean_return[o]) <=
                         1e-12 * std::max(1.0, std::abs(stats.mean_return[o])),
                     "stats identity");
        }
    }

    // Trace bound on a logged run.
    AgentConfig cfg;
    cfg.episodes = 1000;
    cfg.temperature = Schedule::linear(10.0, 2.0, cfg.episodes);
    Rng trace_rng(kMasterSeed + 1);
    MossResult moss = run_moss(m, cfg, trace_rng);
    moss.q.for_each([&](const AugKey&, int, const RewardVector&, double trace) {
        c.expect(trace >= 0.0 && trace <= 1.0, "trace bound");
    });

    // Schedule monotonicity.
    Schedule sched = Schedule::linear(10, 2, 20000);
    double prev = sched.value(0);
    for (long ep = 1; ep <= 25000; ep += 7) {
        double cur = sched.value(ep);
        c.expect(cur <= prev, "schedule monotonicity");
        prev = cur;
    }

    // Seed determinism: identical runs byte-compare equal.
    auto tmp = std::filesystem::temp_directory_path();
    std::filesystem::path dir_a = tmp / "morlab-acceptance-a";
    std::filesystem::path dir_b = tmp / "morlab-acceptance-b";
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);
    ExperimentSpec spec = spec_for("baseline-expected", "original", false);
    spec.trials = 3;
    spec.episodes = 500;
    spec.out_dir = dir_a.string();
    run_experiment(spec);
    spec.out_dir = dir_b.string();
    run_experiment(spec);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    for (const auto& entry : std::filesystem::directory_iterator(dir_a)) {
        if (entry.path().filename() == "manifest.txt") continue;  // records the out dir
        c.expect(slurp(entry.path()) == slurp(dir_b / entry.path().filename()),
                 "byte determinism of " + entry.path().filename().string());
    }
    std::filesystem::remove_all(dir_a);
    std::filesystem::remove_all(dir_b);

    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Check(double&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "oracle exactness (original): table reproduced, DI optimal", criterion_oracle_original},
        {2, "oracle exactness (swapped): table reproduced, ID optimal", criterion_oracle_swapped},
        {3, "oracle-simulator consistency: 1e6-sample means within 4 SE",
         criterion_simulator_consistency},
        {4, "baseline / original / constant alpha: ID modal, DI <= 5", criterion_baseline_constant},
        {5, "baseline / original / decayed alpha: ID >= 18/20", criterion_baseline_decayed},
        {6, "baseline / reward-design: DI modal (>= 6/20)", criterion_reward_design},
        {7, "baseline / extra-state: DI <= 2/20 and ID modal", criterion_extra_state},
        {8, "moss / original / constant alpha: DI modal (>= 10/20)", criterion_moss_constant},
        {9, "moss / original / decayed alpha: DI >= 18/20", criterion_moss_decayed},
        {10, "moss / swapped / both alphas: ID <= 1/20", criterion_moss_swapped},
        {11, "two-phase: original DI modal (>= 8/20), swapped ID <= 12/20", criterion_two_phase},
        {12, "options / original / constant alpha: DI modal (>= 9/20)",
         criterion_options_constant},
        {13, "options / original / decayed alpha: DI >= 18/20, Q within tolerance",
         criterion_options_decayed},
        {14, "property suite: TLO laws, stats identity, traces, schedules, determinism",
         criterion_properties},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        double seconds = 0.0;
        Check result = criterion.run(seconds);
        std::printf("[%2d] %s  %s (%.1fs)%s%s\n", criterion.id, result.ok ? "PASS" : "FAIL",
                    criterion.name, seconds, result.detail.empty() ? "" : "  -- ",
                    result.detail.c_str());
        std::fflush(stdout);
        if (!result.ok) ++failures;
    }
    std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
