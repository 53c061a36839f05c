#include "morl/env/momdp.hpp"

#include <cctype>
#include <stdexcept>

namespace morl {

MomdpModel::MomdpModel(std::string id, int objectives, Rational gamma, RationalVector thresholds,
                       std::vector<StateDef> states, int initial)
    : id_(std::move(id)),
      objectives_(objectives),
      gamma_(gamma),
      thresholds_(std::move(thresholds)),
      states_(std::move(states)),
      initial_(initial) {
    validate();
    build_sampling();
}

TloUtility MomdpModel::utility() const {
    TloUtility u;
    u.thresholds.reserve(thresholds_.size());
    for (const auto& t : thresholds_) u.thresholds.push_back(t.to_double());
    return u;
}

int MomdpModel::state_index(const std::string& name) const {
    for (size_t i = 0; i < states_.size(); ++i)
        if (states_[i].name == name) return static_cast<int>(i);
    return -1;
}

char MomdpModel::action_letter(int s, int a) const {
    return static_cast<char>(std::toupper(static_cast<unsigned char>(states_[s].actions[a].name[0])));
}

int MomdpModel::action_by_letter(int s, char letter) const {
    for (int a = 0; a < action_count(s); ++a)
        if (action_letter(s, a) == std::toupper(static_cast<unsigned char>(letter))) return a;
    return -1;
}

std::vector<int> MomdpModel::choice_states() const {
    std::vector<int> out;
    for (int s = 0; s < state_count(); ++s)
        if (!is_terminal(s) && action_count(s) > 1) out.push_back(s);
    return out;
}

EpisodeStep MomdpModel::step(int s, int a, Rng& rng) const {
    if (s < 0 || s >= state_count() || is_terminal(s))
        throw std::invalid_argument("step from a terminal or unknown state");
    if (a < 0 || a >= action_count(s))
        throw std::invalid_argument("unknown action for state " + states_[s].name);
    const SamplingRow& row = sampling_[s][a];
    double u = rng.uniform01();
    size_t idx = row.cumulative.size() - 1;
    for (size_t i = 0; i < row.cumulative.size(); ++i) {
        if (u < row.cumulative[i]) {
            idx = i;
            break;
        }
    }
    int next = states_[s].actions[a].outcomes[idx].next;
    return EpisodeStep{s, a, next, row.rewards[idx], is_terminal(next)};
}

const Outcome& MomdpModel::success_outcome(int s, int a) const {
    for (const auto& o : states_[s].actions[a].outcomes)
        if (states_[o.next].kind != StateKind::fail) return o;
    throw std::logic_error("action has no non-failing outcome");
}

bool MomdpModel::operator==(const MomdpModel& o) const {
    return objectives_ == o.objectives_ && gamma_ == o.gamma_ && thresholds_ == o.thresholds_ &&
           states_ == o.states_ && initial_ == o.initial_;
}

void MomdpModel::validate() const {
    if (objectives_ < 2) throw std::invalid_argument("a MOMDP needs at least two objectives");
    if (static_cast<int>(thresholds_.size()) != objectives_ - 1)
        throw std::invalid_argument("threshold count must be objectives-1");
    if (states_.empty()) throw std::invalid_argument("model has no states");
    if (initial_ < 0 || initial_ >= state_count() || is_terminal(initial_))
        throw std::invalid_argument("initial state must be a decision state");
    for (const auto& st : states_) {
        if (st.kind != StateKind::decision) {
            if (!st.actions.empty())
                throw std::invalid_argument("terminal state " + st.name + " has actions");
            continue;
        }
        if (st.actions.empty())
            throw std::invalid_argument("decision state " + st.name + " has no actions");
        for (const auto& act : st.actions) {
            if (act.outcomes.empty())
                throw std::invalid_argument("action " + act.name + " has no outcomes");
            Rational total(0);
            for (const auto& o : act.outcomes) {
                if (o.probability < Rational(0))
                    throw std::invalid_argument("negative outcome probability");
                if (o.next < 0 || o.next >= state_count())
                    throw std::invalid_argument("outcome points to unknown state");
                if (static_cast<int>(o.reward.size()) != objectives_)
                    throw std::invalid_argument("outcome reward has wrong length");
                total += o.probability;
            }
            if (total != Rational(1))
                throw std::invalid_argument("outcome probabilities of " + st.name + "/" + act.name +
                                            " do not sum to 1");
        }
    }
    // Finite horizon: no state may reach itself.
    std::vector<int> color(states_.size(), 0);
    auto dfs = [&](auto&& self, int s) -> void {
        color[s] = 1;
        for (const auto& act : states_[s].actions) {
            for (const auto& o : act.outcomes) {
                if (color[o.next] == 1) throw std::invalid_argument("model graph has a cycle");
                if (color[o.next] == 0) self(self, o.next);
            }
        }
        color[s] = 2;
    };
    for (size_t s = 0; s < states_.size(); ++s)
        if (color[s] == 0) dfs(dfs, static_cast<int>(s));
}

void MomdpModel::build_sampling() {
    sampling_.resize(states_.size());
    for (size_t s = 0; s < states_.size(); ++s) {
        sampling_[s].resize(states_[s].actions.size());
        for (size_t a = 0; a < states_[s].actions.size(); ++a) {
            SamplingRow& row = sampling_[s][a];
            double acc = 0.0;
            for (const auto& o : states_[s].actions[a].outcomes) {
                acc += o.probability.to_double();
                row.cumulative.push_back(acc);
                row.rewards.push_back(RewardVector(o.reward));
            }
        }
    }
}

}  // namespace morl
