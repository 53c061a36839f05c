#include "morl/core/tlo.hpp"

#include <stdexcept>

namespace morl {

namespace {

void check_dims(size_t n, const TloUtility& u) {
    if (n != u.objectives()) throw std::invalid_argument("vector length does not match utility");
}

}  // namespace

RewardVector tlo_clip(const RewardVector& v, const TloUtility& u) {
    check_dims(v.size(), u);
    RewardVector out = v;
    for (size_t i = 0; i < u.thresholds.size(); ++i)
        if (out[i] > u.thresholds[i]) out[i] = u.thresholds[i];
    return out;
}

std::weak_ordering tlo_compare(const RewardVector& a, const RewardVector& b, const TloUtility& u) {
    check_dims(a.size(), u);
    check_dims(b.size(), u);
    for (size_t i = 0; i < a.size(); ++i) {
        double av = a[i];
        double bv = b[i];
        if (i < u.thresholds.size()) {
            if (av > u.thresholds[i]) av = u.thresholds[i];
            if (bv > u.thresholds[i]) bv = u.thresholds[i];
        }
        if (av < bv) return std::weak_ordering::less;
        if (av > bv) return std::weak_ordering::greater;
    }
    return std::weak_ordering::equivalent;
}

std::vector<size_t> tlo_argmax(std::span<const RewardVector> values, const TloUtility& u) {
    if (values.empty()) throw std::invalid_argument("tlo_argmax over empty candidate list");
    std::vector<size_t> best{0};
    for (size_t i = 1; i < values.size(); ++i) {
        auto ord = tlo_compare(values[i], values[best.front()], u);
        if (ord == std::weak_ordering::greater) {
            best.assign(1, i);
        } else if (ord == std::weak_ordering::equivalent) {
            best.push_back(i);
        }
    }
    return best;
}

size_t tlo_best(std::span<const RewardVector> values, const TloUtility& u) {
    return tlo_argmax(values, u).front();
}

RationalVector tlo_clip_exact(const RationalVector& v, const RationalVector& thresholds) {
    if (v.size() != thresholds.size() + 1)
        throw std::invalid_argument("vector length does not match thresholds");
    RationalVector out = v;
    for (size_t i = 0; i < thresholds.size(); ++i)
        if (out[i] > thresholds[i]) out[i] = thresholds[i];
    return out;
}

std::weak_ordering tlo_compare_exact(const RationalVector& a, const RationalVector& b,
                                     const RationalVector& thresholds) {
    RationalVector ca = tlo_clip_exact(a, thresholds);
    RationalVector cb = tlo_clip_exact(b, thresholds);
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] < cb[i]) return std::weak_ordering::less;
        if (ca[i] > cb[i]) return std::weak_ordering::greater;
    }
    return std::weak_ordering::equivalent;
}

}  // namespace morl
