#ifndef PPG_GAME_HPP
#define PPG_GAME_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ppg/rational.hpp"

namespace ppg {

/// Agents are addressed by 0-based position internally. Every document and
/// message meant for people (JSON, CLI, exception text) uses 1-based indices.
using AgentIndex = std::size_t;

struct Agent {
    Rational endowment;
    Rational reward_level;

    friend bool operator==(const Agent&, const Agent&) = default;
};

/// A pivotal participation game: threshold tau and per-agent (endowment,
/// reward level). Immutable once constructed.
///
/// Invariants checked on construction: tau > 0, at least one agent, every
/// endowment >= 0 and every reward level strictly inside (0, 1). Violations
/// throw std::invalid_argument naming the agent and the field.
class GameInstance {
public:
    GameInstance(Rational tau, std::vector<Agent> agents);

    const Rational& tau() const { return tau_; }
    std::size_t size() const { return agents_.size(); }
    const std::vector<Agent>& agents() const { return agents_; }
    const Agent& agent(AgentIndex i) const;
    const Rational& endowment(AgentIndex i) const { return agent(i).endowment; }
    const Rational& reward_level(AgentIndex i) const { return agent(i).reward_level; }

    Rational total_endowment() const;
    Rational max_endowment() const;
    Rational max_reward_level() const;

    friend bool operator==(const GameInstance&, const GameInstance&) = default;

private:
    Rational tau_;
    std::vector<Agent> agents_;
};

/// A strategy profile: the set of participating agents and their total
/// contribution e(S).
class Coalition {
public:
    Coalition() = default;
    /// Members may come in any order; duplicates and out-of-range indices
    /// throw.
    Coalition(const GameInstance& game, std::vector<AgentIndex> members);

    /// Bit i of mask selects agent i. Requires game.size() <= 64.
    static Coalition from_mask(const GameInstance& game, std::uint64_t mask);

    const std::vector<AgentIndex>& members() const { return members_; }
    const Rational& total() const { return total_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(AgentIndex i) const;
    std::uint64_t mask() const;

    Coalition with(const GameInstance& game, AgentIndex i) const;
    Coalition without(const GameInstance& game, AgentIndex i) const;

    friend bool operator==(const Coalition&, const Coalition&) = default;

private:
    std::vector<AgentIndex> members_;  // sorted, unique
    Rational total_;
};

/// The interval [lower, upper) that e(S) must fall into for agent i to be a
/// member of a cooperative equilibrium S.
struct AgentBounds {
    Rational lower;  // max{tau, e_i / m_i}
    Rational upper;  // tau + e_i

    bool admissible() const { return lower < upper; }
};

AgentBounds bounds(const GameInstance& game, AgentIndex i);
std::vector<AgentBounds> all_bounds(const GameInstance& game);

/// U_i(S) = e_i 1[i not in S] + m_i e(S) 1[e(S) >= tau].
Rational utility(const GameInstance& game, const Coalition& s, AgentIndex i);

/// Utility when an external investment delta is added to the project.
Rational utility_with_investment(const GameInstance& game, const Coalition& s, AgentIndex i,
                                 const Rational& delta);

/// Utility when contributions are matched at rate rho, turning e(S) into
/// (1 + rho) e(S).
Rational utility_with_matching(const GameInstance& game, const Coalition& s, AgentIndex i,
                               const Rational& rho);

}  // namespace ppg

#endif  // PPG_GAME_HPP
