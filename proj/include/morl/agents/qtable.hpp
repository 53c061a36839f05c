#pragma once

#include <cmath>
#include <compare>
#include <map>
#include <vector>

#include "morl/core/reward_vector.hpp"

namespace morl {

// Base state plus the quantized accumulation that makes action selection
// history-aware. The same quantization is applied on construction and
// lookup, so equal (state, accumulation) pairs always collide.
struct AugKey {
    int state = 0;
    std::vector<long long> bins;

    auto operator<=>(const AugKey&) const = default;
};

inline AugKey make_aug(int state, const RewardVector& accum, double grid) {
    AugKey key;
    key.state = state;
    key.bins.reserve(accum.size());
    for (size_t i = 0; i < accum.size(); ++i)
        key.bins.push_back(std::llround(accum[i] / grid));
    return key;
}

inline AugKey base_key(int state) { return AugKey{state, {}}; }

// Vector Q estimates plus eligibility traces, keyed by (augmented state,
// action-or-option). Entries materialize on first touch with the configured
// initial value; terminal states are never stored (implicit zero).
class QTable {
public:
    QTable() = default;
    QTable(int objectives, double initial_value) : init_(static_cast<size_t>(objectives)) {
        for (size_t i = 0; i < init_.size(); ++i) init_[i] = initial_value;
    }

    struct Entry {
        RewardVector q;
        double trace = 0.0;
    };

    const RewardVector& value(const AugKey& key, int action) {
        return entry(key, action).q;
    }

    RewardVector value_or_init(const AugKey& key, int action) const {
        auto it = entries_.find({key, action});
        return it == entries_.end() ? init_ : it->second.q;
    }

    void force(const AugKey& key, int action, RewardVector q) {
        entry(key, action).q = std::move(q);
    }

    void mark_active(const AugKey& key, int action) { entry(key, action).trace = 1.0; }

    // One sweep of Q(s,a) += alpha * delta * e(s,a) over every entry,
    // followed by the Watkins trace step: decay by gamma*lambda when the
    // exploratory action matched the greedy one, zero otherwise.
    void td_sweep(const RewardVector& delta, double alpha, double decay, bool cut) {
        for (auto& [key, e] : entries_) {
            if (e.trace != 0.0) {
                RewardVector scaled = delta;
                scaled *= alpha * e.trace;
                e.q += scaled;
            }
            e.trace = cut ? 0.0 : e.trace * decay;
        }
    }

    void reset_traces() {
        for (auto& [key, e] : entries_) e.trace = 0.0;
    }

    size_t size() const { return entries_.size(); }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (const auto& [key, e] : entries_) fn(key.first, key.second, e.q, e.trace);
    }

private:
    RewardVector init_;
    std::map<std::pair<AugKey, int>, Entry> entries_;

    Entry& entry(const AugKey& key, int action) {
        auto [it, inserted] = entries_.try_emplace({key, action});
        if (inserted) it->second.q = init_;
        return it->second;
    }
};

// Estimated immediate reward per base (state, action): exact sample mean,
// kept as sum and count so the estimate equals the arithmetic mean of all
// observed rewards bit for bit.
class ITable {
public:
    ITable() = default;
    explicit ITable(int objectives) : zero_(objectives) {}

    void observe(int state, int action, const RewardVector& reward) {
        auto [it, inserted] = cells_.try_emplace({state, action}, Cell{zero_, 0});
        it->second.sum += reward;
        it->second.count += 1;
    }

    RewardVector mean(int state, int action) const {
        auto it = cells_.find({state, action});
        if (it == cells_.end() || it->second.count == 0) return zero_;
        RewardVector m = it->second.sum;
        m *= 1.0 / static_cast<double>(it->second.count);
        return m;
    }

    long count(int state, int action) const {
        auto it = cells_.find({state, action});
        return it == cells_.end() ? 0 : it->second.count;
    }

private:
    struct Cell {
        RewardVector sum;
        long count = 0;
    };
    RewardVector zero_;
    std::map<std::pair<int, int>, Cell> cells_;
};

}  // namespace morl
