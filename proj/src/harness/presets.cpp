#include "morl/harness/presets.hpp"

#include <stdexcept>

namespace morl {

namespace {

ExperimentSpec base(const std::string& algorithm, const std::string& environment, bool decay) {
    ExperimentSpec spec;
    spec.algorithm = algorithm;
    spec.environment = environment;
    spec.decay = decay;
    return spec;
}

}  // namespace

std::vector<std::string> preset_ids() {
    return {
        "ch4-baseline",
        "ch5-reward-design",
        "ch5-extra-state",
        "ch6-moss",
        "ch6-moss-swapped",
        "ch7-two-phase",
        "ch7-two-phase-swapped",
        "ch8-options",
        "ch8-options-swapped",
        "ch9-baseline-decayed",
        "ch9-moss-decayed",
        "ch9-two-phase-decayed",
        "ch9-options-decayed",
    };
}

ExperimentSpec preset(const std::string& name) {
    if (name == "ch4-baseline") return base("baseline-expected", "original", false);
    if (name == "ch5-reward-design") return base("baseline-expected", "reward-design", false);
    if (name == "ch5-extra-state") return base("baseline-expected", "extra-state", false);
    if (name == "ch6-moss") return base("moss", "original", false);
    if (name == "ch6-moss-swapped") return base("moss", "swapped", false);
    if (name == "ch7-two-phase") return base("moss-two-phase", "original", false);
    if (name == "ch7-two-phase-swapped") return base("moss-two-phase", "swapped", false);
    if (name == "ch8-options") return base("options", "original", false);
    if (name == "ch8-options-swapped") return base("options", "swapped", false);
    if (name == "ch9-baseline-decayed") return base("baseline-expected", "original", true);
    if (name == "ch9-moss-decayed") return base("moss", "original", true);
    if (name == "ch9-two-phase-decayed") return base("moss-two-phase", "original", true);
    if (name == "ch9-options-decayed") return base("options", "original", true);
    throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace morl
