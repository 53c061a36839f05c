#pragma once

#include <stdexcept>

namespace morl {

// Per-episode parameter schedule: constant, or a linear ramp from
// `initial` down to `final` over `horizon` episodes (clamped after).
struct Schedule {
    enum class Kind { constant, linear_decay };

    Kind kind = Kind::constant;
    double initial = 0.0;
    double final = 0.0;
    long horizon = 0;

    static Schedule constant_value(double value) {
        return Schedule{Kind::constant, value, value, 0};
    }

    static Schedule linear(double initial, double final, long horizon) {
        if (horizon <= 0)
            throw std::invalid_argument("linear-decay schedule needs a positive horizon");
        if (final > initial)
            throw std::invalid_argument("linear-decay schedule must not increase");
        return Schedule{Kind::linear_decay, initial, final, horizon};
    }

    double value(long episode) const {
        if (episode < 0) throw std::invalid_argument("negative episode index");
        if (kind == Kind::constant) return initial;
        double t = static_cast<double>(episode) / static_cast<double>(horizon);
        if (t > 1.0) t = 1.0;
        return initial + (final - initial) * t;
    }

    bool operator==(const Schedule&) const = default;
};

}  // namespace morl
