#pragma once

#include <iosfwd>
#include <string>

#include "morl/env/momdp.hpp"

namespace morl {

// Declarative model text. Line-keyed document:
//
//   model: original
//   objectives: 2
//   gamma: 1
//   thresholds: 0.88
//   state: A
//   state: Goal goal
//   state: Fail fail
//   initial: A
//   action: A Indirect
//   outcome: 1 B 0 -12
//
// Probabilities and rewards are exact decimals (or p/q fractions); loading
// then saving reproduces the file byte for byte.
std::string save_model(const MomdpModel& model);
MomdpModel load_model(const std::string& text);
MomdpModel load_model_file(const std::string& path);
void save_model_file(const MomdpModel& model, const std::string& path);

}  // namespace morl
