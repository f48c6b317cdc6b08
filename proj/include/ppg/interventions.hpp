#ifndef PPG_INTERVENTIONS_HPP
#define PPG_INTERVENTIONS_HPP

#include <optional>
#include <vector>

#include "ppg/game.hpp"

namespace ppg {

/// Coalition S plus an external amount delta added to the funded total.
/// Valid iff S is empty and delta >= tau, or every member satisfies
/// l_i <= e(S) + delta < u_i.
struct ExternalPlan {
    Coalition coalition;
    Rational delta;
};

/// Coalition S plus a matching rate rho; contributions become (1 + rho) e(S).
/// Valid iff S is nonempty, 0 <= rho < rho_bar and every member satisfies
/// l_i <= (1 + rho) e(S) < tau + (1 + rho) e_i.
struct MatchingPlan {
    Coalition coalition;
    Rational rate;

    Rational cost() const { return rate * coalition.total(); }
};

enum class MatchingObjective { cost, rate };

/// Matching budget 1 / max_i m_i - 1. Rates must stay strictly below it.
Rational rho_bar(const GameInstance& game);

bool validate_external(const GameInstance& game, const ExternalPlan& plan);
bool validate_matching(const GameInstance& game, const MatchingPlan& plan);

/// One level of the greedy planner: the funded total is pinned to the lower
/// bound of `level_agent` and agents are admitted richest first.
/// `admitted` keeps the admission order.
struct ExternalCandidate {
    AgentIndex level_agent;
    Rational level;
    std::vector<AgentIndex> admitted;
    ExternalPlan plan;
};

struct MatchingCandidate {
    AgentIndex level_agent;
    Rational level;
    std::vector<AgentIndex> admitted;
    std::optional<MatchingPlan> plan;  // nullopt when nobody could be admitted
};

/// Per-level candidates of the external-investment planner, in the order
/// the levels are visited (ascending lower bound, then ascending index).
/// Agents with tau + e_i <= e_i/m_i are dropped beforehand.
std::vector<ExternalCandidate> external_candidates(const GameInstance& game);

/// Greedy external-investment plan. Cheapest candidate wins (earliest level
/// on ties); the plan (empty, tau) replaces it only when strictly cheaper.
/// delta <= max{max_i e_i, optimal delta} holds for the result.
ExternalPlan plan_external(const GameInstance& game);

std::vector<MatchingCandidate> matching_candidates(const GameInstance& game);

/// Greedy matching-fund plan, minimizing the chosen objective over the
/// per-level candidates whose rate is below rho_bar (earliest level on
/// ties). nullopt when no candidate fits the budget.
std::optional<MatchingPlan> plan_matching(const GameInstance& game,
                                          MatchingObjective objective = MatchingObjective::cost);

/// Exact minimum external investment by scanning every coalition. Ties go
/// to the smaller coalition bitmask, so (empty, tau) wins ties. n <= 62.
ExternalPlan oracle_external(const GameInstance& game);

/// Exact optimum over every nonempty coalition at its least feasible rate.
/// Ties go to the smaller bitmask. nullopt when no coalition is feasible.
std::optional<MatchingPlan> oracle_matching(const GameInstance& game,
                                            MatchingObjective objective = MatchingObjective::cost);

/// Turns a valid external plan with nonempty S and delta < rho_bar * e(S)
/// into the matching plan (S, delta / e(S)) of identical cost. Throws
/// std::invalid_argument otherwise.
MatchingPlan external_to_matching(const GameInstance& game, const ExternalPlan& plan);

}  // namespace ppg

#endif  // PPG_INTERVENTIONS_HPP
