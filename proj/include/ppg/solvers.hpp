#ifndef PPG_SOLVERS_HPP
#define PPG_SOLVERS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ppg/game.hpp"

namespace ppg {

/// A coalition that reaches tau but drops below it when any single member
/// leaves. removable_check lists (j, e(S \ {j})) for every member j.
struct MinimalityCertificate {
    Coalition coalition;
    std::vector<std::pair<AgentIndex, Rational>> removable_check;
};

/// Greedy accumulation in `order` until e(S) >= tau, then one reverse sweep
/// dropping any member j with e(S \ {j}) >= tau. Returns nullopt when the
/// total endowment is below tau. `order` must be a permutation of 0..n-1.
std::optional<MinimalityCertificate> find_minimal_coalition(const GameInstance& game,
                                                            std::span<const AgentIndex> order);
std::optional<MinimalityCertificate> find_minimal_coalition(const GameInstance& game);

/// For games with e_i/m_i <= tau for every agent. Any minimal coalition is
/// then a cooperative equilibrium; nullopt iff the total endowment is below
/// tau. Throws std::invalid_argument naming the first agent that breaks the
/// ratio precondition.
std::optional<Coalition> solve_low_ratio(const GameInstance& game);
std::optional<Coalition> solve_low_ratio(const GameInstance& game, std::span<const AgentIndex> order);

struct BalancedOutcome {
    std::optional<Coalition> coalition;  // nullopt: no cooperative equilibrium
    std::size_t minimal_size = 0;        // cardinality shared by minimal coalitions
    std::size_t swaps = 0;               // never exceeds n - minimal_size
};

/// Decision procedure for balanced games (all minimal coalitions have the
/// same size). Starts from the minimal_size richest agents and swaps out any
/// member whose lower bound exceeds e(S) for the next richest unused agent.
/// Endowment ties rank by ascending index.
///
/// With verify_balanced the game is first checked exhaustively (n <= 20,
/// otherwise std::length_error) and a non-balanced game throws
/// std::invalid_argument. A total endowment below tau also throws
/// std::invalid_argument.
BalancedOutcome decide_balanced(const GameInstance& game, bool verify_balanced = false);

/// Sizes of all minimal coalitions, ascending and deduplicated. Exhaustive;
/// requires n <= 20.
std::vector<std::size_t> minimal_coalition_sizes(const GameInstance& game);
bool is_balanced(const GameInstance& game);

inline constexpr std::size_t kMaxBalancedVerifyAgents = 20;

}  // namespace ppg

#endif  // PPG_SOLVERS_HPP
