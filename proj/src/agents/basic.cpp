#include "morl/agents/runners.hpp"

namespace morl {

BasicResult run_basic(const MomdpModel& model, const AgentConfig& cfg, Rng& rng) {
    cfg.validate();
    const TloUtility u = model.utility();
    const int n = model.objectives();
    BasicResult out{QTable(n, cfg.q_init), {}};
    QTable& q = out.q;

    auto utilities = [&](const AugKey& key, const RewardVector& accum, int count) {
        std::vector<RewardVector> vals;
        vals.reserve(count);
        for (int a = 0; a < count; ++a) vals.push_back(q.value(key, a) + accum);
        return vals;
    };

    out.log.episodes.reserve(cfg.episodes);
    for (long ep = 0; ep < cfg.episodes; ++ep) {
        const double alpha = cfg.alpha.value(ep);
        const double temp = cfg.temperature.value(ep);
        q.reset_traces();
        RewardVector accum(n);
        RewardVector ret(n);
        int s = model.reset();
        AugKey key = make_aug(s, accum, cfg.grid);
        auto vals = utilities(key, accum, model.action_count(s));
        int a = static_cast<int>(softmax_rank_select(vals, u, temp, rng));

        for (int guard = 0; guard <= model.state_count(); ++guard) {
            EpisodeStep step = model.step(s, a, rng);
            ret += step.reward;
            accum += step.reward;
            if (step.done) {
                RewardVector delta = step.reward - q.value(key, a);
                q.mark_active(key, a);
                q.td_sweep(delta, alpha, cfg.gamma * cfg.lambda, false);
                break;
            }
            AugKey next_key = make_aug(step.next, accum, cfg.grid);
            auto next_vals = utilities(next_key, accum, model.action_count(step.next));
            int greedy = static_cast<int>(tlo_best(next_vals, u));
            int chosen = static_cast<int>(softmax_rank_select(next_vals, u, temp, rng));
            RewardVector delta =
                step.reward + cfg.gamma * q.value(next_key, greedy) - q.value(key, a);
            q.mark_active(key, a);
            q.td_sweep(delta, alpha, cfg.gamma * cfg.lambda, chosen != greedy);
            s = step.next;
            key = next_key;
            a = chosen;
        }

        EpisodeRecord rec;
        rec.episode = ep;
        rec.greedy = actual_return_greedy_label(model, q, cfg.grid);
        rec.realized_return = ret;
        rec.alpha = alpha;
        rec.temperature = temp;
        out.log.episodes.push_back(std::move(rec));
    }
    out.log.final_label = out.log.episodes.back().greedy;
    return out;
}

}  // namespace morl
