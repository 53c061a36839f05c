#include "morl/agents/config.hpp"

#include <stdexcept>

namespace morl {

void AgentConfig::validate() const {
    if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("gamma must be in [0, 1]");
    if (lambda < 0.0 || lambda > 1.0) throw std::invalid_argument("lambda must be in [0, 1]");
    if (epsilon <= 0.0 || epsilon >= 1.0) throw std::invalid_argument("epsilon must be in (0, 1)");
    if (episodes <= 0) throw std::invalid_argument("episode budget must be positive");
    if (data_episodes < 1 || learn_episodes < 1)
        throw std::invalid_argument("phase durations must be at least one episode");
    if (grid <= 0.0) throw std::invalid_argument("quantization grid must be positive");
}

}  // namespace morl
