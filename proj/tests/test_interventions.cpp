#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ppg/equilibrium.hpp"
#include "ppg/interventions.hpp"
#include "support.hpp"

using namespace ppg;
using ppg::testing::example_one;
using ppg::testing::figure_one;
using ppg::testing::harm_game;
using ppg::testing::make_game;
using ppg::testing::three_threes;

TEST_CASE("matching budget") {
    CHECK(rho_bar(three_threes()) == Rational(4));
    CHECK(rho_bar(figure_one()) == Rational(13, 7));
    CHECK(rho_bar(example_one()) == Rational(1));
}

TEST_CASE("harm game: external investment can destroy the equilibrium") {
    const auto game = harm_game();
    CHECK(validate_external(game, {Coalition(game, {0, 1, 2}), Rational(0)}));
    for (const auto& s : ppg::testing::all_coalitions(game)) {
        CHECK_FALSE(validate_external(game, {s, Rational(2)}));
        CHECK_FALSE(validate_matching(game, {s, Rational(1, 4)}));
    }
}

TEST_CASE("external plans: empty coalition and sign rules") {
    const auto game = three_threes();
    CHECK(validate_external(game, {Coalition(), Rational(11)}));
    CHECK(validate_external(game, {Coalition(), Rational(12)}));
    CHECK_FALSE(validate_external(game, {Coalition(), Rational(10)}));
    CHECK_FALSE(validate_external(harm_game(), {Coalition(harm_game(), {0, 1, 2}), Rational(-1)}));
}

TEST_CASE("matching plans: empty coalition, budget edge, three threes") {
    const auto game = three_threes();
    CHECK(validate_matching(game, {Coalition(game, {0, 1, 2}), Rational(2, 3)}));
    CHECK_FALSE(validate_matching(game, {Coalition(), Rational(1)}));
    CHECK_FALSE(validate_matching(game, {Coalition(), Rational(0)}));
    // At exactly rho_bar the plan is outside the budget.
    const auto pair = make_game("10", {{"5", "1/2"}, {"5", "1/2"}});
    CHECK(validate_matching(pair, {Coalition(pair, {0, 1}), Rational(0)}));
    CHECK_FALSE(validate_matching(pair, {Coalition(pair, {0}), Rational(1)}));
}

TEST_CASE("three threes: nobody invests without help") {
    const auto game = three_threes();
    const auto oracle = oracle_external(game);
    CHECK(oracle.coalition.empty());
    CHECK(oracle.delta == Rational(11));
    const auto plan = plan_external(game);
    CHECK(plan.coalition.empty());
    CHECK(plan.delta == Rational(11));
    CHECK(external_candidates(game).empty());

    for (auto objective : {MatchingObjective::cost, MatchingObjective::rate}) {
        const auto best = oracle_matching(game, objective);
        REQUIRE(best.has_value());
        CHECK(best->coalition.members() == std::vector<AgentIndex>{0, 1, 2});
        CHECK(best->rate == Rational(2, 3));
        CHECK(best->cost() == Rational(6));
        const auto greedy = plan_matching(game, objective);
        REQUIRE(greedy.has_value());
        CHECK(greedy->coalition.members() == std::vector<AgentIndex>{0, 1, 2});
        CHECK(greedy->cost() == Rational(6));
    }
}

TEST_CASE("harm game oracle needs no investment") {
    const auto plan = oracle_external(harm_game());
    CHECK(plan.delta == Rational(0));
    CHECK(plan.coalition.members() == std::vector<AgentIndex>{0, 1, 2});
}

TEST_CASE("four-agent example: external optimum") {
    const auto game = example_one();
    // With agent 4 aboard the total is at least 11, which already breaks the
    // upper bound 12 of the small agents once lifted to l_4 = 18; so agent 4
    // can only stand alone (delta 9) and the small trio wins with delta 4.
    CHECK_FALSE(validate_external(game, {Coalition(game, {0, 1, 2, 3}), Rational(3)}));
    const auto plan = oracle_external(game);
    CHECK(plan.delta == Rational(4));
    CHECK(plan.coalition.members() == std::vector<AgentIndex>{0, 1, 2});
    CHECK(validate_external(game, plan));
    CHECK(ppg::testing::brute_external_optimum(game) == Rational(4));
    CHECK(plan_external(game).delta == Rational(4));
}

TEST_CASE("four-agent example: matching plans checked against the scan") {
    const auto game = example_one();

    // The single rich agent at the level of the small agents looks cheap
    // (rate 1/9, cost 1) but is not a candidate: the pool at level 10 only
    // holds agents whose lower bound is at most 10, which excludes agent 4.
    CHECK_FALSE(validate_matching(game, {Coalition(game, {3}), Rational(1, 9)}));

    // {1,4} at rate 7/11 funds 18 but must stay below 10 + (18/11) * 2 for
    // agent 1, so it is not an equilibrium under matching.
    CHECK_FALSE(validate_matching(game, {Coalition(game, {0, 3}), Rational(7, 11)}));

    for (auto objective : {MatchingObjective::cost, MatchingObjective::rate}) {
        const auto scan = ppg::testing::brute_matching_optimum(game, objective);
        const auto oracle = oracle_matching(game, objective);
        REQUIRE(scan.has_value());
        REQUIRE(oracle.has_value());
        CHECK(validate_matching(game, *oracle));
        CHECK((objective == MatchingObjective::cost ? oracle->cost() : oracle->rate) == *scan);
        CHECK(oracle->coalition.members() == std::vector<AgentIndex>{0, 1, 2});
        CHECK(oracle->rate == Rational(2, 3));
        CHECK(oracle->cost() == Rational(4));
    }

    const auto greedy = plan_matching(game);
    REQUIRE(greedy.has_value());
    CHECK(greedy->coalition.members() == std::vector<AgentIndex>{0, 1, 2});
    CHECK(greedy->rate == Rational(2, 3));
}

TEST_CASE("fifteen-agent game plans") {
    const auto game = figure_one();
    const auto plan = plan_external(game);
    CHECK(plan.delta == Rational(0));
    CHECK(plan.coalition.size() == 6);
    CHECK(plan.coalition.total() == Rational(12));
    CHECK(oracle_external(game).delta == Rational(0));
}

TEST_CASE("single agent plans") {
    const auto game = make_game("8", {{"5", "1/2"}});
    const auto plan = plan_external(game);
    CHECK(plan.coalition.members() == std::vector<AgentIndex>{0});
    CHECK(plan.delta == Rational(5));
    CHECK(oracle_external(game).delta == Rational(5));

    CHECK_FALSE(plan_matching(make_game("100", {{"1", "1/2"}})).has_value());
    CHECK_FALSE(oracle_matching(make_game("100", {{"1", "1/2"}})).has_value());
}

TEST_CASE("external to matching conversion") {
    const auto game = figure_one();
    const Coalition five(game, {0, 1, 2, 3, 4});
    const auto m = external_to_matching(game, {five, Rational(2)});
    CHECK(m.rate == Rational(1, 5));
    CHECK(m.cost() == Rational(2));
    CHECK(validate_matching(game, m));

    const Coalition six(game, {0, 1, 2, 3, 4, 5});
    CHECK(external_to_matching(game, {six, Rational(0)}).rate == Rational(0));

    const auto lone = make_game("8", {{"5", "1/2"}});
    CHECK_THROWS_AS(external_to_matching(lone, {Coalition(lone, {0}), Rational(5)}), std::invalid_argument);
    CHECK_THROWS_AS(external_to_matching(game, {Coalition(), Rational(12)}), std::invalid_argument);
    CHECK_THROWS_AS(external_to_matching(game, {five, Rational(1)}), std::invalid_argument);
}

TEST_CASE("property: greedy plans are sound and within the additive bounds") {
    ppg::testing::InstanceGenerator gen(606);
    for (int trial = 0; trial < 400; ++trial) {
        const auto game = gen.random_game(9);
        const Rational richest = game.max_endowment();

        const auto external = plan_external(game);
        const auto best_external = oracle_external(game);
        CHECK(validate_external(game, external));
        CHECK(validate_external(game, best_external));
        CHECK(best_external.delta == ppg::testing::brute_external_optimum(game));
        CHECK(external.delta <= max(richest, best_external.delta));

        for (auto objective : {MatchingObjective::cost, MatchingObjective::rate}) {
            const auto best = oracle_matching(game, objective);
            const auto scan = ppg::testing::brute_matching_optimum(game, objective);
            REQUIRE(best.has_value() == scan.has_value());
            if (best) {
                CHECK(validate_matching(game, *best));
                CHECK((objective == MatchingObjective::cost ? best->cost() : best->rate) == *scan);
            }
            const auto greedy = plan_matching(game, objective);
            if (greedy) CHECK(validate_matching(game, *greedy));
        }

        const auto best_cost = oracle_matching(game, MatchingObjective::cost);
        if (rho_bar(game) >= Rational(1) && best_cost) {
            const auto greedy = plan_matching(game);
            REQUIRE(greedy.has_value());
            CHECK(greedy->cost() <= max(richest, best_cost->cost()));
            CHECK(greedy->rate <= max(Rational(1), best_cost->rate));
        }
    }
}

TEST_CASE("property: matching bounds when every reward level is at most one half") {
    // rho_bar >= 1 holds on every instance here, so the bounds always apply.
    ppg::testing::InstanceGenerator gen(515);
    int exercised = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        const auto base = gen.random_game(9);
        std::vector<Agent> agents;
        for (const auto& a : base.agents()) {
            agents.push_back({a.endowment, a.reward_level > Rational(1, 2) ? a.reward_level / Rational(2) : a.reward_level});
        }
        const GameInstance game(base.tau(), std::move(agents));
        REQUIRE(rho_bar(game) >= Rational(1));
        const auto best = oracle_matching(game);
        if (!best) continue;
        ++exercised;
        const auto greedy = plan_matching(game);
        REQUIRE(greedy.has_value());
        CHECK(validate_matching(game, *greedy));
        CHECK(greedy->cost() <= max(game.max_endowment(), best->cost()));
        CHECK(greedy->rate <= max(Rational(1), best->rate));
    }
    CHECK(exercised > 300);
}

TEST_CASE("greedy matching skips an over-budget candidate that looks cheapest") {
    const auto game = make_game("97/3", {{"12", "1/4"}, {"31/2", "1/2"}});
    const auto candidates = matching_candidates(game);
    REQUIRE(candidates.size() == 2);
    REQUIRE(candidates[0].plan.has_value());
    CHECK(candidates[0].plan->rate == Rational(101, 93));
    CHECK(candidates[0].plan->rate >= rho_bar(game));
    const auto plan = plan_matching(game);
    REQUIRE(plan.has_value());
    CHECK(plan->coalition.members() == std::vector<AgentIndex>{0, 1});
    CHECK(plan->rate == Rational(41, 55));
    CHECK(validate_matching(game, *plan));
}

TEST_CASE("property: converted external plans keep their cost") {
    ppg::testing::InstanceGenerator gen(88);
    int converted = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto game = gen.random_game(8);
        const auto best_external = oracle_external(game);
        for (const auto& c : external_candidates(game)) {
            const auto& plan = c.plan;
            if (plan.delta >= rho_bar(game) * plan.coalition.total()) continue;
            const auto m = external_to_matching(game, plan);
            CHECK(validate_matching(game, m));
            CHECK(m.cost() == plan.delta);
            ++converted;
        }
        if (!best_external.coalition.empty() &&
            best_external.delta < rho_bar(game) * best_external.coalition.total()) {
            const auto best_matching = oracle_matching(game);
            REQUIRE(best_matching.has_value());
            CHECK(best_matching->cost() <= best_external.delta);
        }
    }
    CHECK(converted > 100);
}

TEST_CASE("property: candidates admit the richest agents first") {
    ppg::testing::InstanceGenerator gen(4);
    for (int trial = 0; trial < 300; ++trial) {
        const auto game = gen.random_game(10);
        auto richer_first = [&](const std::vector<AgentIndex>& admitted) {
            return std::is_sorted(admitted.begin(), admitted.end(), [&](AgentIndex x, AgentIndex y) {
                return game.endowment(x) > game.endowment(y);
            });
        };
        for (const auto& c : external_candidates(game)) CHECK(richer_first(c.admitted));
        for (const auto& c : matching_candidates(game)) CHECK(richer_first(c.admitted));
    }
}

TEST_CASE("property: huge magnitudes keep oracle answers") {
    ppg::testing::InstanceGenerator gen(19);
    const Rational factor(mpz_class("1180591620717411303424"));
    for (int trial = 0; trial < 40; ++trial) {
        const auto game = gen.random_game(7);
        std::vector<Agent> agents;
        for (const auto& a : game.agents()) agents.push_back({a.endowment * factor, a.reward_level});
        const GameInstance big(game.tau() * factor, std::move(agents));
        const auto small_plan = oracle_external(game);
        const auto big_plan = oracle_external(big);
        CHECK(big_plan.delta == small_plan.delta * factor);
        CHECK(big_plan.coalition.mask() == small_plan.coalition.mask());
        const auto small_match = oracle_matching(game);
        const auto big_match = oracle_matching(big);
        REQUIRE(small_match.has_value() == big_match.has_value());
        if (small_match) CHECK(big_match->rate == small_match->rate);
    }
}
