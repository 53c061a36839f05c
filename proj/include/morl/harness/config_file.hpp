#pragma once

#include <string>

#include "morl/harness/experiment.hpp"

namespace morl {

// Key/value run-configuration document mirroring ExperimentSpec field for
// field. Serialization round-trips losslessly; unknown keys are rejected.
std::string serialize_spec(const ExperimentSpec& spec);
ExperimentSpec parse_spec(const std::string& text);
ExperimentSpec load_spec_file(const std::string& path);

// The manifest written next to experiment outputs: the fully resolved spec
// plus a status line.
std::string manifest_text(const ExperimentSpec& spec, const std::string& status);

}  // namespace morl
