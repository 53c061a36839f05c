#include "morl/agents/global_stats.hpp"

#include <stdexcept>

namespace morl {

namespace {

// Shared value construction for both the mutating and frozen paths.
template <typename Table>
HolisticValues build_values(const GlobalStats& stats, Table& q, const MomdpModel& model, int s,
                            const RewardVector& accumulated, std::optional<double> epsilon,
                            double grid) {
    const StateStats& st = stats.state[s];
    HolisticValues out;
    out.key = make_aug(s, accumulated, grid);
    int n_actions = model.action_count(s);
    out.utilities.reserve(n_actions);

    auto local = [&](int a) {
        RewardVector u = st.arrival;
        if constexpr (std::is_const_v<Table>)
            u += q.value_or_init(out.key, a);
        else
            u += q.value(out.key, a);
        return u;
    };

    double p = static_cast<double>(st.visits) / static_cast<double>(stats.episodes);
    if (p >= 1.0) {
        for (int a = 0; a < n_actions; ++a) out.utilities.push_back(local(a));
        return out;
    }

    // Estimated return in episodes where s is not visited.
    RewardVector off = stats.mean_return - p * st.episode_return;
    off *= 1.0 / (1.0 - p);
    double weight = epsilon ? std::max(p, *epsilon) : p;
    for (int a = 0; a < n_actions; ++a)
        out.utilities.push_back(weight * local(a) + (1.0 - weight) * off);
    return out;
}

}  // namespace

HolisticValues update_statistics(GlobalStats& stats, QTable& q, const MomdpModel& model, int s,
                                 const RewardVector& accumulated, double alpha,
                                 std::optional<double> epsilon, double grid) {
    if (stats.episodes == 0)
        throw std::logic_error("update_statistics before any episode was started");
    StateStats& st = stats.state[s];
    if (!st.seen) {
        st.seen = true;
        ++st.visits;
    }
    st.arrival += alpha * (accumulated - st.arrival);
    return build_values<QTable>(stats, q, model, s, accumulated, epsilon, grid);
}

HolisticValues holistic_values(const GlobalStats& stats, const QTable& q, const MomdpModel& model,
                               int s, const RewardVector& accumulated,
                               std::optional<double> epsilon, double grid) {
    if (stats.episodes == 0)
        throw std::logic_error("holistic values before any episode was started");
    return build_values<const QTable>(stats, q, model, s, accumulated, epsilon, grid);
}

}  // namespace morl
