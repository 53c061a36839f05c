#include "morl/agents/runners.hpp"

namespace morl {

namespace {

// Greedy walk along the success route; `utilities` yields the action values
// at a state, `advance` accounts the chosen action's accumulation.
template <typename Utilities, typename Advance>
PolicyLabel rollout(const MomdpModel& model, Utilities&& utilities, Advance&& advance) {
    const TloUtility u = model.utility();
    PolicyLabel label;
    int s = model.reset();
    int guard = model.state_count() + 1;
    while (!model.is_terminal(s) && guard-- > 0) {
        std::vector<RewardVector> vals = utilities(s);
        int a = static_cast<int>(tlo_best(vals, u));
        if (model.action_count(s) > 1) label += model.action_letter(s, a);
        advance(s, a);
        s = model.success_outcome(s, a).next;
    }
    return label;
}

}  // namespace

PolicyLabel actual_return_greedy_label(const MomdpModel& model, const QTable& q, double grid) {
    RewardVector accum(model.objectives());
    return rollout(
        model,
        [&](int s) {
            AugKey key = make_aug(s, accum, grid);
            std::vector<RewardVector> vals;
            for (int a = 0; a < model.action_count(s); ++a)
                vals.push_back(q.value_or_init(key, a) + accum);
            return vals;
        },
        [&](int s, int a) { accum += model.reward_real(model.success_outcome(s, a)); });
}

PolicyLabel expected_return_greedy_label(const MomdpModel& model, const QTable& q,
                                         const ITable& immediate, double grid) {
    RewardVector accum(model.objectives());
    return rollout(
        model,
        [&](int s) {
            AugKey key = make_aug(s, accum, grid);
            std::vector<RewardVector> vals;
            for (int a = 0; a < model.action_count(s); ++a)
                vals.push_back(q.value_or_init(key, a) + accum);
            return vals;
        },
        [&](int s, int a) { accum += immediate.mean(s, a); });
}

PolicyLabel holistic_greedy_label(const MomdpModel& model, const QTable& q,
                                  const GlobalStats& stats, std::optional<double> epsilon,
                                  double grid) {
    RewardVector accum(model.objectives());
    return rollout(
        model,
        [&](int s) {
            return holistic_values(stats, q, model, s, accum, epsilon, grid).utilities;
        },
        [&](int s, int a) { accum += model.reward_real(model.success_outcome(s, a)); });
}

PolicyLabel options_greedy_label(const MomdpModel& model, const QTable& q,
                                 const std::vector<PolicyOption>& options) {
    const TloUtility u = model.utility();
    AugKey key = base_key(model.initial());
    std::vector<RewardVector> vals;
    vals.reserve(options.size());
    for (size_t i = 0; i < options.size(); ++i)
        vals.push_back(q.value_or_init(key, static_cast<int>(i)));
    return options[tlo_best(vals, u)].label;
}

}  // namespace morl
