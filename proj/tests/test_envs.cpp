#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "morl/env/model_io.hpp"
#include "morl/env/space_traders.hpp"

using namespace morl;

namespace {

RationalVector mean_reward(const MomdpModel& m, int s, int a) {
    RationalVector mean(m.objectives(), Rational(0));
    for (const auto& o : m.state(s).actions[a].outcomes) mean += o.probability * o.reward;
    return mean;
}

RationalVector rv(const char* a, const char* b) {
    return {Rational::from_decimal(a), Rational::from_decimal(b)};
}

}  // namespace

TEST_CASE("original model matches the published state-action table") {
    MomdpModel m = space_traders_original();
    REQUIRE(m.state_count() == 4);
    CHECK(m.state(m.initial()).name == "A");
    CHECK(m.thresholds_exact() == RationalVector{Rational::from_decimal("0.88")});

    int a = m.state_index("A");
    int b = m.state_index("B");
    CHECK(mean_reward(m, a, 0) == rv("0", "-12"));
    CHECK(mean_reward(m, a, 1) == rv("0", "-5.5"));
    CHECK(mean_reward(m, a, 2) == rv("0", "0"));
    CHECK(mean_reward(m, b, 0) == rv("1", "-10"));
    CHECK(mean_reward(m, b, 1) == rv("0.9", "-7.9"));
    CHECK(mean_reward(m, b, 2) == rv("0.85", "0"));

    // (A, Direct) succeeds into B with reward (0, -6).
    const Outcome& direct = m.state(a).actions[1].outcomes[0];
    CHECK(m.state(direct.next).name == "B");
    CHECK(direct.reward == rv("0", "-6"));
    // (B, Indirect) reaches the goal with certainty.
    const ActionDef& bi = m.state(b).actions[0];
    REQUIRE(bi.outcomes.size() == 1);
    CHECK(bi.outcomes[0].probability == Rational(1));
    CHECK(m.state(bi.outcomes[0].next).kind == StateKind::goal);
    CHECK(bi.outcomes[0].reward == rv("1", "-10"));
}

TEST_CASE("reward-design model pays -1 on failure and shifts the threshold") {
    MomdpModel m = space_traders_reward_design();
    CHECK(m.thresholds_exact() == RationalVector{Rational::from_decimal("0.76")});
    int a = m.state_index("A");
    int b = m.state_index("B");
    CHECK(mean_reward(m, a, 1) == rv("-0.1", "-5.5"));
    CHECK(mean_reward(m, a, 2) == rv("-0.15", "0"));
    CHECK(mean_reward(m, b, 0) == rv("1", "-10"));
    CHECK(mean_reward(m, b, 1) == rv("0.8", "-7.9"));
    CHECK(mean_reward(m, b, 2) == rv("0.7", "0"));
    // (A, Teleport) failure lands in a terminal with reward (-1, 0).
    const Outcome& fail = m.state(a).actions[2].outcomes[1];
    CHECK(m.state(fail.next).kind == StateKind::fail);
    CHECK(fail.reward == rv("-1", "0"));
}

TEST_CASE("swapped model moves the time penalties between A and B") {
    MomdpModel m = space_traders_swapped();
    int a = m.state_index("A");
    int b = m.state_index("B");
    CHECK(mean_reward(m, a, 0) == rv("0", "-10"));
    CHECK(mean_reward(m, a, 1) == rv("0", "-7.9"));
    CHECK(mean_reward(m, b, 0) == rv("1", "-12"));
    CHECK(mean_reward(m, b, 1) == rv("0.9", "-5.5"));
    CHECK(mean_reward(m, b, 2) == rv("0.85", "0"));
}

TEST_CASE("extra-state default chain has the designed zero accumulation") {
    MomdpModel m = space_traders_extra_state(default_extra_state_chain());
    int a = m.state_index("A");
    int c = m.state_index("C");
    REQUIRE(c >= 0);
    CHECK(c == 2);
    REQUIRE(m.action_count(c) == 1);

    // Expected first-objective accumulation along the Direct route is zero.
    RationalVector at_a = mean_reward(m, a, 1);
    RationalVector at_c = mean_reward(m, c, 0);
    CHECK(at_a[0] + at_c[0] == Rational(0));

    // Route success probability from A to B via Direct.
    Rational p(1);
    p *= m.state(a).actions[1].outcomes[0].probability;
    p *= m.state(c).actions[0].outcomes[0].probability;
    CHECK(p == Rational::from_decimal("0.9"));
    CHECK(m.state(m.state(c).actions[0].outcomes[0].next).name == "B");

    // Success-route time matches the one-hop Direct action it replaces.
    Rational time = m.state(a).actions[1].outcomes[0].reward[1] +
                    m.state(c).actions[0].outcomes[0].reward[1];
    CHECK(time == Rational(-6));
}

TEST_CASE("one-leg chain degenerates to the reward-design model") {
    ChainSpec spec;
    spec.legs.push_back(ChainLeg{"Direct", Rational::from_decimal("0.9"), rv("0", "-6"),
                                 rv("0", "-1"), true});
    CHECK(space_traders_extra_state(spec) == space_traders_reward_design());
}

TEST_CASE("invalid chain specs are rejected") {
    CHECK_THROWS_AS(space_traders_extra_state(ChainSpec{}), std::invalid_argument);
    ChainSpec bad;
    bad.legs.push_back(ChainLeg{"Direct", Rational(2), rv("0", "0"), rv("0", "0"), false});
    CHECK_THROWS_AS(space_traders_extra_state(bad), std::invalid_argument);
    ChainSpec wrong_len;
    wrong_len.legs.push_back(ChainLeg{"Direct", Rational(1), {Rational(0)}, rv("0", "0"), false});
    CHECK_THROWS_AS(space_traders_extra_state(wrong_len), std::invalid_argument);
}

TEST_CASE("constructors are deterministic and probabilities sum to one") {
    for (const auto& id : environment_ids()) {
        MomdpModel m = make_environment(id);
        CHECK(m == make_environment(id));
        for (int s = 0; s < m.state_count(); ++s) {
            for (int a = 0; a < m.action_count(s); ++a) {
                Rational total(0);
                double total_d = 0.0;
                for (const auto& o : m.state(s).actions[a].outcomes) {
                    total += o.probability;
                    total_d += o.probability.to_double();
                }
                CHECK(total == Rational(1));
                CHECK(std::abs(total_d - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("reset returns the initial state A") {
    for (const auto& id : environment_ids()) {
        MomdpModel m = make_environment(id);
        CHECK(m.state(m.reset()).name == "A");
    }
}

TEST_CASE("step samples declared outcomes at the declared rates") {
    MomdpModel m = space_traders_original();
    int a = m.state_index("A");
    int b = m.state_index("B");
    Rng rng(31415);

    // (A, Indirect) is deterministic.
    for (int i = 0; i < 100; ++i) {
        EpisodeStep st = m.step(a, 0, rng);
        CHECK(st.next == b);
        CHECK(st.reward == RewardVector{0, -12});
        CHECK(!st.done);
    }

    // (B, Direct): success frequency 0.9 +/- 0.005 over 1e5 draws, and the
    // sampled reward is always one of the declared outcome vectors.
    const int n = 100000;
    int successes = 0;
    for (int i = 0; i < n; ++i) {
        EpisodeStep st = m.step(b, 1, rng);
        bool success = st.reward == RewardVector{1, -8};
        bool failure = st.reward == RewardVector{0, -7};
        CHECK((success || failure));
        CHECK(st.done);
        if (success) ++successes;
    }
    CHECK(std::abs(successes / double(n) - 0.9) <= 0.005);

    CHECK_THROWS_AS(m.step(m.state_index("Goal"), 0, rng), std::invalid_argument);
    CHECK_THROWS_AS(m.step(a, 5, rng), std::invalid_argument);
}

TEST_CASE("monte-carlo means match the declared means within 4 standard errors") {
    Rng rng(777);
    const int n = 100000;
    for (const auto& id : environment_ids()) {
        MomdpModel m = make_environment(id);
        for (int s = 0; s < m.state_count(); ++s) {
            for (int a = 0; a < m.action_count(s); ++a) {
                RationalVector mean = mean_reward(m, s, a);
                RewardVector sum(m.objectives());
                for (int i = 0; i < n; ++i) sum += m.step(s, a, rng).reward;
                for (int o = 0; o < m.objectives(); ++o) {
                    double mu = mean[o].to_double();
                    // Exact variance of the declared outcome mixture.
                    double var = 0.0;
                    for (const auto& out : m.state(s).actions[a].outcomes) {
                        double r = out.reward[o].to_double();
                        var += out.probability.to_double() * (r - mu) * (r - mu);
                    }
                    double tolerance = var == 0.0 ? 0.0 : 4.0 * std::sqrt(var / n);
                    CHECK(std::abs(sum[o] / n - mu) <= tolerance);
                }
            }
        }
    }
}

TEST_CASE("episodes terminate within |states|+1 steps") {
    Rng rng(555);
    for (const auto& id : environment_ids()) {
        MomdpModel m = make_environment(id);
        for (int episode = 0; episode < 2000; ++episode) {
            int s = m.reset();
            int steps = 0;
            while (!m.is_terminal(s)) {
                s = m.step(s, static_cast<int>(rng.next() % m.action_count(s)), rng).next;
                ++steps;
                REQUIRE(steps <= m.state_count() + 1);
            }
        }
    }
}

TEST_CASE("models round-trip through the declarative text format") {
    for (const auto& id : environment_ids()) {
        MomdpModel m = make_environment(id);
        std::string text = save_model(m);
        MomdpModel loaded = load_model(text);
        CHECK(loaded == m);
        CHECK(loaded.id() == m.id());
        CHECK(save_model(loaded) == text);
    }
}

TEST_CASE("model text errors are reported") {
    CHECK_THROWS_AS(load_model("nonsense: 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(load_model("model: x\nobjectives: 2\nthresholds: 0.5\nstate: A\ninitial: B\n"),
                    std::invalid_argument);
    // Probabilities that do not sum to one are rejected by the model itself.
    std::string bad =
        "model: x\nobjectives: 2\ngamma: 1\nthresholds: 0.5\n"
        "state: A\nstate: Goal goal\ninitial: A\n"
        "action: A Go\noutcome: 0.5 Goal 1 0\n";
    CHECK_THROWS_AS(load_model(bad), std::invalid_argument);
}
