#include <set>
#include <stdexcept>

#include "morl/agents/runners.hpp"

namespace morl {

std::vector<PolicyOption> all_policy_options(const MomdpModel& model) {
    PolicyOption base{"", std::vector<int>(model.state_count(), -1)};
    for (int s = 0; s < model.state_count(); ++s)
        if (!model.is_terminal(s) && model.action_count(s) == 1) base.action_by_state[s] = 0;
    std::vector<PolicyOption> options{base};
    for (int s : model.choice_states()) {
        std::vector<PolicyOption> grown;
        grown.reserve(options.size() * model.action_count(s));
        for (const auto& opt : options) {
            for (int a = 0; a < model.action_count(s); ++a) {
                PolicyOption next = opt;
                next.label += model.action_letter(s, a);
                next.action_by_state[s] = a;
                grown.push_back(std::move(next));
            }
        }
        options = std::move(grown);
    }
    return options;
}

namespace {

void validate_options(const MomdpModel& model, const std::vector<PolicyOption>& options) {
    size_t expected = 1;
    for (int s : model.choice_states())
        expected *= static_cast<size_t>(model.action_count(s));
    if (options.size() != expected)
        throw std::invalid_argument("options must cover every deterministic policy");
    std::set<PolicyLabel> labels;
    for (const auto& opt : options) {
        if (opt.action_by_state.size() != static_cast<size_t>(model.state_count()))
            throw std::invalid_argument("option " + opt.label + " sized for a different model");
        for (int s = 0; s < model.state_count(); ++s) {
            if (model.is_terminal(s)) continue;
            int a = opt.action_by_state[s];
            if (a < 0 || a >= model.action_count(s))
                throw std::invalid_argument("option " + opt.label + " undefined at state " +
                                            model.state(s).name);
        }
        labels.insert(opt.label);
    }
    if (labels.size() != options.size())
        throw std::invalid_argument("duplicate option labels");
}

}  // namespace

OptionsResult run_options(const MomdpModel& model, std::vector<PolicyOption> options,
                          const AgentConfig& cfg, Rng& rng) {
    cfg.validate();
    validate_options(model, options);
    const TloUtility u = model.utility();
    const int n = model.objectives();
    OptionsResult out{QTable(n, cfg.q_init), std::move(options),
                      std::vector<long>(0), {}};
    out.option_episodes.assign(out.options.size(), 0);
    QTable& q = out.q;
    const int initial = model.reset();

    out.log.episodes.reserve(cfg.episodes);
    for (long ep = 0; ep < cfg.episodes; ++ep) {
        const double alpha = cfg.alpha.value(ep);
        const double temp = cfg.temperature.value(ep);
        q.reset_traces();
        int s = initial;
        RewardVector ret(n);

        std::vector<RewardVector> vals;
        vals.reserve(out.options.size());
        for (size_t i = 0; i < out.options.size(); ++i)
            vals.push_back(q.value(base_key(s), static_cast<int>(i)));
        int opt = static_cast<int>(softmax_rank_select(vals, u, temp, rng));
        ++out.option_episodes[opt];

        for (int guard = 0; guard <= model.state_count(); ++guard) {
            int a = out.options[opt].action_by_state[s];
            EpisodeStep step = model.step(s, a, rng);
            ret += step.reward;
            RewardVector target = step.reward;
            if (!step.done) target += cfg.gamma * q.value(base_key(step.next), opt);
            RewardVector delta = target - q.value(base_key(s), opt);
            q.mark_active(base_key(s), opt);
            q.td_sweep(delta, alpha, cfg.gamma * cfg.lambda, false);
            if (step.done) break;
            s = step.next;
        }

        EpisodeRecord rec;
        rec.episode = ep;
        rec.greedy = options_greedy_label(model, q, out.options);
        rec.realized_return = ret;
        rec.alpha = alpha;
        rec.temperature = temp;
        rec.option_q.reserve(out.options.size());
        for (size_t i = 0; i < out.options.size(); ++i)
            rec.option_q.push_back(q.value_or_init(base_key(initial), static_cast<int>(i)));
        out.log.episodes.push_back(std::move(rec));
    }
    out.log.final_label = out.log.episodes.back().greedy;
    return out;
}

}  // namespace morl
