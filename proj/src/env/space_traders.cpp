#include "morl/env/space_traders.hpp"

#include <stdexcept>

namespace morl {

namespace {

Rational dec(const char* text) { return Rational::from_decimal(text); }

RationalVector rv(Rational first, Rational second) { return RationalVector{first, second}; }

ActionDef certain(const std::string& name, int next, RationalVector reward) {
    return ActionDef{name, {Outcome{Rational(1), next, std::move(reward)}}};
}

ActionDef risky(const std::string& name, Rational p, int next, RationalVector success, int fail,
                RationalVector failure) {
    return ActionDef{name,
                     {Outcome{p, next, std::move(success)},
                      Outcome{Rational(1) - p, fail, std::move(failure)}}};
}

constexpr int kA = 0;
constexpr int kB = 1;

MomdpModel two_state_model(std::string id, Rational threshold, std::vector<ActionDef> at_a,
                           std::vector<ActionDef> at_b) {
    std::vector<StateDef> states{
        StateDef{"A", StateKind::decision, std::move(at_a)},
        StateDef{"B", StateKind::decision, std::move(at_b)},
        StateDef{"Goal", StateKind::goal, {}},
        StateDef{"Fail", StateKind::fail, {}},
    };
    return MomdpModel(std::move(id), 2, Rational(1), {threshold}, std::move(states), kA);
}

}  // namespace

MomdpModel space_traders_original() {
    const int goal = 2;
    const int fail = 3;
    return two_state_model(
        "original", dec("0.88"),
        {certain("Indirect", kB, rv(0, -12)),
         risky("Direct", dec("0.9"), kB, rv(0, -6), fail, rv(0, -1)),
         risky("Teleport", dec("0.85"), kB, rv(0, 0), fail, rv(0, 0))},
        {certain("Indirect", goal, rv(1, -10)),
         risky("Direct", dec("0.9"), goal, rv(1, -8), fail, rv(0, -7)),
         risky("Teleport", dec("0.85"), goal, rv(1, 0), fail, rv(0, 0))});
}

MomdpModel space_traders_reward_design() {
    const int goal = 2;
    const int fail = 3;
    return two_state_model(
        "reward-design", dec("0.76"),
        {certain("Indirect", kB, rv(0, -12)),
         risky("Direct", dec("0.9"), kB, rv(0, -6), fail, rv(-1, -1)),
         risky("Teleport", dec("0.85"), kB, rv(0, 0), fail, rv(-1, 0))},
        {certain("Indirect", goal, rv(1, -10)),
         risky("Direct", dec("0.9"), goal, rv(1, -8), fail, rv(-1, -7)),
         risky("Teleport", dec("0.85"), goal, rv(1, 0), fail, rv(-1, 0))});
}

MomdpModel space_traders_swapped() {
    const int goal = 2;
    const int fail = 3;
    return two_state_model(
        "swapped", dec("0.88"),
        {certain("Indirect", kB, rv(0, -10)),
         risky("Direct", dec("0.9"), kB, rv(0, -8), fail, rv(0, -7)),
         risky("Teleport", dec("0.85"), kB, rv(0, 0), fail, rv(0, 0))},
        {certain("Indirect", goal, rv(1, -12)),
         risky("Direct", dec("0.9"), goal, rv(1, -6), fail, rv(0, -1)),
         risky("Teleport", dec("0.85"), goal, rv(1, 0), fail, rv(0, 0))});
}

ChainSpec default_extra_state_chain() {
    ChainSpec spec;
    spec.legs.push_back(ChainLeg{"Direct", Rational(1), rv(0, -1), rv(0, 0), false});
    spec.legs.push_back(ChainLeg{"Continue", dec("0.9"), rv(0, -5), rv(0, -1), false});
    return spec;
}

MomdpModel space_traders_extra_state(const ChainSpec& spec) {
    if (spec.legs.empty()) throw std::invalid_argument("chain spec needs at least one leg");
    for (const auto& leg : spec.legs) {
        if (leg.action.empty()) throw std::invalid_argument("chain leg without an action name");
        if (leg.success_probability <= Rational(0) || leg.success_probability > Rational(1))
            throw std::invalid_argument("chain leg probability must be in (0, 1]");
        if (leg.success_reward.size() != 2 || leg.failure_reward.size() != 2)
            throw std::invalid_argument("chain leg rewards must have two objectives");
    }

    MomdpModel base = space_traders_reward_design();
    const int extra = static_cast<int>(spec.legs.size()) - 1;
    // A(0), B(1), intermediates from index 2, then Goal/Fail at the end.
    const int goal = 2 + extra;
    const int fail = goal + 1;
    auto chain_target = [&](size_t leg_index) {
        return leg_index + 1 < spec.legs.size() ? 2 + static_cast<int>(leg_index) : kB;
    };
    auto leg_action = [&](size_t i) {
        const ChainLeg& leg = spec.legs[i];
        RationalVector failure = leg.failure_reward;
        if (leg.failure_penalty) failure[0] += Rational(-1);
        if (leg.success_probability == Rational(1))
            return certain(leg.action, chain_target(i), leg.success_reward);
        return risky(leg.action, leg.success_probability, chain_target(i), leg.success_reward,
                     fail, failure);
    };

    std::vector<StateDef> states;
    states.reserve(4 + extra);
    for (int s : {kA, kB}) {
        StateDef st = base.state(s);
        for (auto& act : st.actions) {
            for (auto& o : act.outcomes) {
                StateKind kind = base.state(o.next).kind;
                if (kind == StateKind::goal)
                    o.next = goal;
                else if (kind == StateKind::fail)
                    o.next = fail;
            }
        }
        states.push_back(std::move(st));
    }
    states[kA].actions[1] = leg_action(0);
    for (int i = 0; i < extra; ++i) {
        std::string name(1, static_cast<char>('C' + i));
        states.push_back(StateDef{name, StateKind::decision, {leg_action(i + 1)}});
    }
    states.push_back(StateDef{"Goal", StateKind::goal, {}});
    states.push_back(StateDef{"Fail", StateKind::fail, {}});

    return MomdpModel("extra-state", 2, Rational(1), base.thresholds_exact(), std::move(states),
                      kA);
}

std::vector<std::string> environment_ids() {
    return {"original", "reward-design", "extra-state", "swapped"};
}

MomdpModel make_environment(const std::string& id, const ChainSpec& chain) {
    if (id == "original") return space_traders_original();
    if (id == "reward-design") return space_traders_reward_design();
    if (id == "swapped") return space_traders_swapped();
    if (id == "extra-state") return space_traders_extra_state(chain);
    throw std::invalid_argument("unknown environment id: " + id);
}

MomdpModel make_environment(const std::string& id) {
    return make_environment(id, default_extra_state_chain());
}

}  // namespace morl
