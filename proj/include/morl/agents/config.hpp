#pragma once

#include "morl/core/schedule.hpp"

namespace morl {

struct AgentConfig {
    Schedule alpha = Schedule::constant_value(0.01);
    double gamma = 1.0;
    double lambda = 0.95;
    Schedule temperature = Schedule::linear(10.0, 2.0, 20000);
    long episodes = 20000;
    double epsilon = 0.05;     // probability-weight floor (two-phase)
    long data_episodes = 500;  // D_D
    long learn_episodes = 1500;  // D_L
    double grid = 0.1;         // accumulation quantization
    double q_init = 0.0;

    void validate() const;

    bool operator==(const AgentConfig&) const = default;
};

}  // namespace morl
