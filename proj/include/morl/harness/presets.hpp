#pragma once

#include <string>
#include <vector>

#include "morl/harness/experiment.hpp"

namespace morl {

// Named experiment presets covering the full study grid (chapters of
// results: baseline, reward design, extra state, single- and two-phase
// MOSS, options, and the decayed-learning-rate reruns).
std::vector<std::string> preset_ids();
ExperimentSpec preset(const std::string& name);

}  // namespace morl
