#include "ppg/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "ppg/detail/subset_scan.hpp"

namespace ppg {

namespace {

void check_permutation(const GameInstance& game, std::span<const AgentIndex> order) {
    std::vector<bool> seen(game.size(), false);
    if (order.size() != game.size()) throw std::invalid_argument("agent order must list every agent once");
    for (AgentIndex i : order) {
        if (i >= game.size() || seen[i]) throw std::invalid_argument("agent order must list every agent once");
        seen[i] = true;
    }
}

std::vector<AgentIndex> identity_order(std::size_t n) {
    std::vector<AgentIndex> order(n);
    std::iota(order.begin(), order.end(), AgentIndex{0});
    return order;
}

// Descending endowment, ascending index on ties.
std::vector<AgentIndex> richest_first(const GameInstance& game) {
    auto order = identity_order(game.size());
    std::stable_sort(order.begin(), order.end(), [&](AgentIndex a, AgentIndex b) {
        return game.endowment(a) > game.endowment(b);
    });
    return order;
}

}  // namespace

std::optional<MinimalityCertificate> find_minimal_coalition(const GameInstance& game,
                                                            std::span<const AgentIndex> order) {
    check_permutation(game, order);

    std::vector<AgentIndex> picked;
    Rational total;
    for (AgentIndex i : order) {
        if (total >= game.tau()) break;
        picked.push_back(i);
        total += game.endowment(i);
    }
    if (total < game.tau()) return std::nullopt;

    // Greedy can overshoot: with e = (1, 5) and tau = 5 it keeps agent 1.
    for (std::size_t k = picked.size(); k-- > 0;) {
        if (total - game.endowment(picked[k]) >= game.tau()) {
            total -= game.endowment(picked[k]);
            picked.erase(picked.begin() + static_cast<std::ptrdiff_t>(k));
        }
    }

    MinimalityCertificate cert{Coalition(game, picked), {}};
    for (AgentIndex j : cert.coalition.members()) {
        cert.removable_check.emplace_back(j, cert.coalition.total() - game.endowment(j));
    }
    return cert;
}

std::optional<MinimalityCertificate> find_minimal_coalition(const GameInstance& game) {
    const auto order = identity_order(game.size());
    return find_minimal_coalition(game, order);
}

std::optional<Coalition> solve_low_ratio(const GameInstance& game, std::span<const AgentIndex> order) {
    for (AgentIndex i = 0; i < game.size(); ++i) {
        const Rational ratio = game.endowment(i) / game.reward_level(i);
        if (ratio > game.tau()) {
            throw std::invalid_argument("agent " + std::to_string(i + 1) + ": e/m = " + ratio.str() +
                                        " exceeds tau = " + game.tau().str());
        }
    }
    auto cert = find_minimal_coalition(game, order);
    if (!cert) return std::nullopt;
    return std::move(cert->coalition);
}

std::optional<Coalition> solve_low_ratio(const GameInstance& game) {
    const auto order = identity_order(game.size());
    return solve_low_ratio(game, order);
}

BalancedOutcome decide_balanced(const GameInstance& game, bool verify_balanced) {
    if (verify_balanced && !is_balanced(game)) {
        throw std::invalid_argument("game is not balanced: minimal coalitions differ in size");
    }

    const auto order = richest_first(game);
    const auto cert = find_minimal_coalition(game, order);
    if (!cert) {
        throw std::invalid_argument("total endowment " + game.total_endowment().str() + " is below tau = " +
                                    game.tau().str());
    }

    BalancedOutcome out;
    out.minimal_size = cert->coalition.size();
    const auto b = all_bounds(game);

    std::vector<AgentIndex> members(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(out.minimal_size));
    std::size_t next_unused = out.minimal_size;
    Rational total;
    for (AgentIndex i : members) total += game.endowment(i);

    for (;;) {
        auto blocked = std::find_if(members.begin(), members.end(),
                                    [&](AgentIndex i) { return b[i].lower > total; });
        if (blocked == members.end()) break;
        if (next_unused == order.size()) return out;
        total -= game.endowment(*blocked);
        *blocked = order[next_unused++];
        total += game.endowment(*blocked);
        ++out.swaps;
        if (out.swaps > game.size() - out.minimal_size) {
            throw std::logic_error("balanced solver exceeded n - m swaps");
        }
    }
    out.coalition = Coalition(game, members);
    return out;
}

std::vector<std::size_t> minimal_coalition_sizes(const GameInstance& game) {
    if (game.size() > kMaxBalancedVerifyAgents) {
        throw std::length_error("balancedness check is exhaustive and limited to n <= 20");
    }
    std::set<std::size_t> sizes;
    detail::with_scaled_game(game, [&](const auto& g) {
        detail::scan_subsets(g, detail::all_agents_mask(game.size()), [&](std::uint64_t, const auto& agg) {
            if (agg.sum >= g.tau && agg.sum - agg.min_endowment < g.tau) {
                sizes.insert(static_cast<std::size_t>(agg.size));
            }
            return true;
        });
    });
    return {sizes.begin(), sizes.end()};
}

bool is_balanced(const GameInstance& game) { return minimal_coalition_sizes(game).size() <= 1; }

}  // namespace ppg
