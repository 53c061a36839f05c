#include "morl/oracle/oracle.hpp"

#include <stdexcept>

namespace morl {

std::vector<PolicyLabel> enumerate_policies(const MomdpModel& model) {
    std::vector<int> choice = model.choice_states();
    std::vector<PolicyLabel> labels{""};
    for (int s : choice) {
        std::vector<PolicyLabel> grown;
        grown.reserve(labels.size() * model.action_count(s));
        for (const auto& prefix : labels)
            for (int a = 0; a < model.action_count(s); ++a)
                grown.push_back(prefix + model.action_letter(s, a));
        labels = std::move(grown);
    }
    return labels;
}

std::vector<int> resolve_policy(const MomdpModel& model, const PolicyLabel& label) {
    std::vector<int> actions(model.state_count(), -1);
    size_t pos = 0;
    for (int s = 0; s < model.state_count(); ++s) {
        if (model.is_terminal(s)) continue;
        if (model.action_count(s) == 1) {
            actions[s] = 0;
            continue;
        }
        if (pos >= label.size()) throw std::invalid_argument("policy label too short: " + label);
        int a = model.action_by_letter(s, label[pos]);
        if (a < 0)
            throw std::invalid_argument("label letter '" + std::string(1, label[pos]) +
                                        "' names no action in state " + model.state(s).name);
        actions[s] = a;
        ++pos;
    }
    if (pos != label.size()) throw std::invalid_argument("policy label too long: " + label);
    return actions;
}

namespace {

void expand(const MomdpModel& model, const std::vector<int>& actions, int s, Rational prob,
            RationalVector accum, Rational discount, PolicyEvaluation& eval) {
    if (model.is_terminal(s)) {
        if (model.state(s).kind == StateKind::goal) eval.success_probability += prob;
        eval.trajectories.push_back(TrajectoryOutcome{prob, std::move(accum)});
        return;
    }
    const ActionDef& act = model.state(s).actions[actions[s]];
    for (const auto& o : act.outcomes) {
        RationalVector next_accum = accum;
        next_accum += discount * o.reward;
        expand(model, actions, o.next, prob * o.probability, std::move(next_accum),
               discount * model.gamma(), eval);
    }
}

}  // namespace

PolicyEvaluation evaluate_policy(const MomdpModel& model, const PolicyLabel& label) {
    std::vector<int> actions = resolve_policy(model, label);
    PolicyEvaluation eval;
    eval.label = label;
    eval.success_probability = Rational(0);
    expand(model, actions, model.initial(), Rational(1),
           RationalVector(model.objectives(), Rational(0)), Rational(1), eval);
    eval.mean_exact = RationalVector(model.objectives(), Rational(0));
    for (const auto& t : eval.trajectories) eval.mean_exact += t.probability * t.cumulative;
    return eval;
}

std::vector<PolicyEvaluation> evaluate_all(const MomdpModel& model) {
    std::vector<PolicyEvaluation> out;
    for (const auto& label : enumerate_policies(model)) out.push_back(evaluate_policy(model, label));
    return out;
}

PolicyLabel ser_optimal(const MomdpModel& model) {
    return ser_optimal(model, model.thresholds_exact());
}

PolicyLabel ser_optimal(const MomdpModel& model, const RationalVector& thresholds) {
    std::vector<PolicyEvaluation> evals = evaluate_all(model);
    const PolicyEvaluation* best = &evals.front();
    for (const auto& e : evals) {
        auto ord = tlo_compare_exact(e.mean_exact, best->mean_exact, thresholds);
        if (ord == std::weak_ordering::greater ||
            (ord == std::weak_ordering::equivalent && e.label < best->label))
            best = &e;
    }
    return best->label;
}

std::vector<PolicyLabel> threshold_satisfying(const MomdpModel& model) {
    std::vector<PolicyLabel> out;
    const Rational& t1 = model.thresholds_exact().front();
    for (const auto& e : evaluate_all(model))
        if (e.mean_exact.front() >= t1) out.push_back(e.label);
    return out;
}

}  // namespace morl
