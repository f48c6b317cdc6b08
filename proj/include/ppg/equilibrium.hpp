#ifndef PPG_EQUILIBRIUM_HPP
#define PPG_EQUILIBRIUM_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "ppg/game.hpp"

namespace ppg {

enum class Certification { characterization, deviation_check };

/// Distance of e(S) from a member's bounds: e(S) - l_i and u_i - e(S).
struct MemberSlack {
    AgentIndex agent;
    Rational above_lower;
    Rational below_upper;
};

/// Witness that a coalition is a cooperative Nash equilibrium. Every slack
/// pair of a certified report is (>= 0, > 0).
struct EquilibriumReport {
    Coalition coalition;
    Certification certified_by = Certification::characterization;
    std::vector<MemberSlack> slack;
};

enum class BoundSide { lower, upper };

/// Why a coalition is not a cooperative equilibrium: the first member (by
/// index) whose bound is violated. For the lower side e(S) < bound, for the
/// upper side e(S) >= bound.
struct Rejection {
    AgentIndex agent;
    BoundSide side;
    Rational total;
    Rational bound;
};

using NeVerdict = std::variant<EquilibriumReport, Rejection>;

/// Given the participating others (i not among them), true iff joining is
/// agent i's best response: e(others) < tau <= e(others) + e_i and
/// (1 - m_i)/m_i * e_i <= e(others). Indifference counts as participating.
/// Throws std::invalid_argument if i is in others.
bool best_response_is_participate(const GameInstance& game, const Coalition& others, AgentIndex i);

/// Checks max{tau, e_i/m_i} <= e(S) < tau + e_i for every member.
/// Throws std::invalid_argument for an empty coalition.
NeVerdict is_cooperative_ne(const GameInstance& game, const Coalition& s);

/// Nash test straight from the utility function: nobody gains by switching
/// alone. Ties are settled like best_response_is_participate: an
/// indifferent agent prefers participating exactly when her contribution
/// flips the project from failure to success. Does not use the bound
/// characterization, so it serves as an oracle for it.
bool deviation_check(const GameInstance& game, const Coalition& s);

/// Report for a coalition that passes deviation_check and reaches tau, or
/// nullopt.
std::optional<EquilibriumReport> certify_by_deviation(const GameInstance& game, const Coalition& s);

/// All nonempty cooperative equilibria in ascending bitmask order, capped at
/// `limit` entries. Exponential in n; n must not exceed 62.
std::vector<Coalition> enumerate_cooperative_ne(const GameInstance& game,
                                                std::optional<std::size_t> limit = std::nullopt);

}  // namespace ppg

#endif  // PPG_EQUILIBRIUM_HPP
