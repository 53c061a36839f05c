#include "morl/agents/runners.hpp"

namespace morl {

MossResult run_moss(const MomdpModel& model, const AgentConfig& cfg, Rng& rng) {
    cfg.validate();
    const TloUtility u = model.utility();
    const int n = model.objectives();
    MossResult out{QTable(n, cfg.q_init), GlobalStats(n, model.state_count()), {}};
    QTable& q = out.q;
    GlobalStats& stats = out.stats;

    out.log.episodes.reserve(cfg.episodes);
    for (long ep = 0; ep < cfg.episodes; ++ep) {
        const double alpha = cfg.alpha.value(ep);
        const double temp = cfg.temperature.value(ep);
        q.reset_traces();
        stats.begin_episode();
        RewardVector accum(n);
        RewardVector ret(n);
        int s = model.reset();
        HolisticValues hv =
            update_statistics(stats, q, model, s, accum, alpha, std::nullopt, cfg.grid);
        AugKey key = hv.key;
        int a = static_cast<int>(softmax_rank_select(hv.utilities, u, temp, rng));

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
            HolisticValues next =
                update_statistics(stats, q, model, step.next, accum, alpha, std::nullopt, cfg.grid);
            int greedy = static_cast<int>(tlo_best(next.utilities, u));
            int chosen = static_cast<int>(softmax_rank_select(next.utilities, u, temp, rng));
            RewardVector delta =
                step.reward + cfg.gamma * q.value(next.key, greedy) - q.value(key, a);
            q.mark_active(key, a);
            q.td_sweep(delta, alpha, cfg.gamma * cfg.lambda, chosen != greedy);
            s = step.next;
            key = next.key;
            a = chosen;
        }
        stats.end_episode(accum, alpha);

        EpisodeRecord rec;
        rec.episode = ep;
        rec.greedy = holistic_greedy_label(model, q, stats, std::nullopt, cfg.grid);
        rec.realized_return = ret;
        rec.alpha = alpha;
        rec.temperature = temp;
        out.log.episodes.push_back(std::move(rec));
    }
    out.log.final_label = out.log.episodes.back().greedy;
    return out;
}

MossResult run_moss_two_phase(const MomdpModel& model, const AgentConfig& cfg, Rng& rng) {
    cfg.validate();
    const TloUtility u = model.utility();
    const int n = model.objectives();
    MossResult out{QTable(n, cfg.q_init), GlobalStats(n, model.state_count()), {}};
    QTable& q = out.q;

    // Greedy execution in the data phase samples uniformly among TLO-maximal
    // actions. With a fixed tie-break the all-zero initial table would pin
    // the first cycle to a single policy and bias every statistic gathered
    // from it.
    auto greedy_execute = [&](const std::vector<RewardVector>& utilities, Rng& stream) {
        std::vector<size_t> best = tlo_argmax(utilities, u);
        return static_cast<int>(best[stream.next() % best.size()]);
    };

    out.log.episodes.reserve(cfg.episodes);
    auto record = [&](long ep, const RewardVector& ret, double alpha, double temp) {
        EpisodeRecord rec;
        rec.episode = ep;
        rec.greedy = holistic_greedy_label(model, q, out.stats, cfg.epsilon, cfg.grid);
        rec.realized_return = ret;
        rec.alpha = alpha;
        rec.temperature = temp;
        out.log.episodes.push_back(std::move(rec));
    };

    long ep = 0;
    while (ep < cfg.episodes) {
        // Data-gathering phase: follow the greedy policy only, rebuilding the
        // global statistics from scratch for this cycle.
        out.stats = GlobalStats(n, model.state_count());
        GlobalStats& stats = out.stats;
        for (long d = 0; d < cfg.data_episodes && ep < cfg.episodes; ++d, ++ep) {
            const double alpha = cfg.alpha.value(ep);
            const double temp = cfg.temperature.value(ep);
            stats.begin_episode();
            RewardVector accum(n);
            RewardVector ret(n);
            int s = model.reset();
            HolisticValues hv =
                update_statistics(stats, q, model, s, accum, alpha, cfg.epsilon, cfg.grid);
            int a = greedy_execute(hv.utilities, rng);
            for (int guard = 0; guard <= model.state_count(); ++guard) {
                EpisodeStep step = model.step(s, a, rng);
                ret += step.reward;
                accum += step.reward;
                if (step.done) break;
                hv = update_statistics(stats, q, model, step.next, accum, alpha, cfg.epsilon,
                                       cfg.grid);
                a = greedy_execute(hv.utilities, rng);
                s = step.next;
            }
            stats.end_episode(accum, alpha);
            record(ep, ret, alpha, temp);
        }

        // Learning phase: exploratory Q(lambda) updates against the frozen
        // statistics gathered above.
        for (long l = 0; l < cfg.learn_episodes && ep < cfg.episodes; ++l, ++ep) {
            const double alpha = cfg.alpha.value(ep);
            const double temp = cfg.temperature.value(ep);
            q.reset_traces();
            RewardVector accum(n);
            RewardVector ret(n);
            int s = model.reset();
            HolisticValues hv =
                holistic_values(out.stats, q, model, s, accum, cfg.epsilon, cfg.grid);
            AugKey key = hv.key;
            int a = static_cast<int>(softmax_rank_select(hv.utilities, u, temp, rng));
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
                HolisticValues next =
                    holistic_values(out.stats, q, model, step.next, accum, cfg.epsilon, cfg.grid);
                int greedy = static_cast<int>(tlo_best(next.utilities, u));
                int chosen = static_cast<int>(softmax_rank_select(next.utilities, u, temp, rng));
                RewardVector delta =
                    step.reward + cfg.gamma * q.value(next.key, greedy) - q.value(key, a);
                q.mark_active(key, a);
                q.td_sweep(delta, alpha, cfg.gamma * cfg.lambda, chosen != greedy);
                s = step.next;
                key = next.key;
                a = chosen;
            }
            record(ep, ret, alpha, temp);
        }
    }
    out.log.final_label = out.log.episodes.back().greedy;
    return out;
}

}  // namespace morl
