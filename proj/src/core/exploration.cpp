#include "morl/core/exploration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace morl {

std::vector<int> tlo_ranks(std::span<const RewardVector> values, const TloUtility& u) {
    if (values.empty()) throw std::invalid_argument("rank of empty candidate list");
    std::vector<size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return tlo_compare(values[a], values[b], u) == std::weak_ordering::greater;
    });
    std::vector<int> ranks(values.size(), 0);
    int rank = 0;
    for (size_t i = 1; i < order.size(); ++i) {
        if (tlo_compare(values[order[i - 1]], values[order[i]], u) == std::weak_ordering::greater)
            ++rank;
        ranks[order[i]] = rank;
    }
    return ranks;
}

std::vector<double> softmax_rank_probabilities(std::span<const RewardVector> values,
                                               const TloUtility& u, double temperature) {
    if (temperature <= 0.0) throw std::invalid_argument("softmax temperature must be positive");
    std::vector<int> ranks = tlo_ranks(values, u);
    std::vector<double> p(values.size());
    double total = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        p[i] = std::exp(-static_cast<double>(ranks[i]) / temperature);
        total += p[i];
    }
    for (auto& v : p) v /= total;
    return p;
}

size_t softmax_rank_select(std::span<const RewardVector> values, const TloUtility& u,
                           double temperature, Rng& rng) {
    std::vector<double> p = softmax_rank_probabilities(values, u, temperature);
    return rng.pick_weighted(p);
}

}  // namespace morl
