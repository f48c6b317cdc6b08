#include "ppg/equilibrium.hpp"

#include <stdexcept>
#include <string>

#include "ppg/detail/subset_scan.hpp"

namespace ppg {

namespace {

// Participation flips the project from failure to success.
bool is_pivotal(const GameInstance& game, const Rational& others_total, AgentIndex i) {
    return others_total < game.tau() && game.tau() <= others_total + game.endowment(i);
}

// Agent i's current action is a best response to the rest of s.
bool is_best_response(const GameInstance& game, const Coalition& s, AgentIndex i) {
    const Coalition in = s.with(game, i);
    const Coalition out = s.without(game, i);
    const Rational join = utility(game, in, i);
    const Rational stay_out = utility(game, out, i);
    const bool prefers_joining =
        join > stay_out || (join == stay_out && is_pivotal(game, out.total(), i));
    return prefers_joining == s.contains(i);
}

EquilibriumReport make_report(const GameInstance& game, const Coalition& s, Certification how) {
    EquilibriumReport report{s, how, {}};
    for (AgentIndex i : s.members()) {
        const auto b = bounds(game, i);
        report.slack.push_back({i, s.total() - b.lower, b.upper - s.total()});
    }
    return report;
}

}  // namespace

bool best_response_is_participate(const GameInstance& game, const Coalition& others, AgentIndex i) {
    if (others.contains(i)) {
        throw std::invalid_argument("agent " + std::to_string(i + 1) + " is already among the others");
    }
    const auto& a = game.agent(i);
    const Rational& rest = others.total();
    const bool pivotal = is_pivotal(game, rest, i);
    const bool worth_it = (Rational(1) - a.reward_level) / a.reward_level * a.endowment <= rest;
    return pivotal && worth_it;
}

NeVerdict is_cooperative_ne(const GameInstance& game, const Coalition& s) {
    if (s.empty()) {
        throw std::invalid_argument("a cooperative equilibrium needs at least one participant");
    }
    for (AgentIndex i : s.members()) {
        const auto b = bounds(game, i);
        if (s.total() < b.lower) return Rejection{i, BoundSide::lower, s.total(), b.lower};
        if (s.total() >= b.upper) return Rejection{i, BoundSide::upper, s.total(), b.upper};
    }
    return make_report(game, s, Certification::characterization);
}

bool deviation_check(const GameInstance& game, const Coalition& s) {
    for (AgentIndex i = 0; i < game.size(); ++i) {
        if (!is_best_response(game, s, i)) return false;
    }
    return true;
}

std::optional<EquilibriumReport> certify_by_deviation(const GameInstance& game, const Coalition& s) {
    if (s.empty() || s.total() < game.tau() || !deviation_check(game, s)) return std::nullopt;
    return make_report(game, s, Certification::deviation_check);
}

std::vector<Coalition> enumerate_cooperative_ne(const GameInstance& game, std::optional<std::size_t> limit) {
    std::vector<Coalition> found;
    if (limit && *limit == 0) return found;

    std::uint64_t admissible = 0;
    const auto b = all_bounds(game);
    for (AgentIndex i = 0; i < game.size(); ++i) {
        if (b[i].admissible()) admissible |= std::uint64_t{1} << i;
    }
    if (admissible == 0) return found;

    std::vector<std::uint64_t> masks;
    detail::with_scaled_game(game, [&](const auto& g) {
        detail::scan_subsets(g, admissible, [&](std::uint64_t mask, const auto& agg) {
            if (agg.max_lower <= agg.sum && agg.sum < agg.min_upper) {
                masks.push_back(mask);
                if (limit && masks.size() >= *limit) return false;
            }
            return true;
        });
    });

    found.reserve(masks.size());
    for (auto mask : masks) found.push_back(Coalition::from_mask(game, mask));
    return found;
}

}  // namespace ppg
