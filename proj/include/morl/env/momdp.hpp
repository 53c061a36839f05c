#pragma once

#include <string>
#include <vector>

#include "morl/core/random.hpp"
#include "morl/core/rational.hpp"
#include "morl/core/reward_vector.hpp"
#include "morl/core/tlo.hpp"

namespace morl {

// One letter per multi-choice decision state, e.g. "DI" = Direct at A,
// Indirect at B.
using PolicyLabel = std::string;

enum class StateKind { decision, goal, fail };

struct Outcome {
    Rational probability;
    int next;                // state index
    RationalVector reward;

    bool operator==(const Outcome&) const = default;
};

struct ActionDef {
    std::string name;
    std::vector<Outcome> outcomes;

    bool operator==(const ActionDef&) const = default;
};

struct StateDef {
    std::string name;
    StateKind kind = StateKind::decision;
    std::vector<ActionDef> actions;  // empty for terminals

    bool operator==(const StateDef&) const = default;
};

struct EpisodeStep {
    int state;
    int action;
    int next;
    RewardVector reward;
    bool done;
};

// Declarative finite-horizon MOMDP with exact outcome probabilities and
// rewards. Immutable after construction; `step` is pure given a stream.
class MomdpModel {
public:
    MomdpModel(std::string id, int objectives, Rational gamma, RationalVector thresholds,
               std::vector<StateDef> states, int initial);

    const std::string& id() const { return id_; }
    int objectives() const { return objectives_; }
    const Rational& gamma() const { return gamma_; }
    const RationalVector& thresholds_exact() const { return thresholds_; }
    TloUtility utility() const;

    int state_count() const { return static_cast<int>(states_.size()); }
    const StateDef& state(int i) const { return states_[i]; }
    const std::vector<StateDef>& states() const { return states_; }
    int initial() const { return initial_; }
    int state_index(const std::string& name) const;  // -1 when unknown

    bool is_terminal(int s) const { return states_[s].kind != StateKind::decision; }
    int action_count(int s) const { return static_cast<int>(states_[s].actions.size()); }
    char action_letter(int s, int a) const;
    int action_by_letter(int s, char letter) const;  // -1 when unknown

    // Decision states, in index order, that offer an actual choice; these
    // are the states policy-label letters refer to.
    std::vector<int> choice_states() const;

    int reset() const { return initial_; }
    EpisodeStep step(int s, int a, Rng& rng) const;

    // First declared outcome of (s, a) that does not end in a fail state;
    // the success route greedy rollouts follow.
    const Outcome& success_outcome(int s, int a) const;

    RewardVector reward_real(const Outcome& o) const { return RewardVector(o.reward); }

    // Structural equality; the id is metadata and not compared.
    bool operator==(const MomdpModel& o) const;

private:
    std::string id_;
    int objectives_;
    Rational gamma_;
    RationalVector thresholds_;
    std::vector<StateDef> states_;
    int initial_;

    struct SamplingRow {
        std::vector<double> cumulative;
        std::vector<RewardVector> rewards;
    };
    std::vector<std::vector<SamplingRow>> sampling_;  // [state][action]

    void validate() const;
    void build_sampling();
};

}  // namespace morl
