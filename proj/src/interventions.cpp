#include "ppg/interventions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ppg/detail/subset_scan.hpp"

namespace ppg {

namespace {

std::vector<AgentIndex> by_ascending_lower(const std::vector<AgentIndex>& agents, const std::vector<AgentBounds>& b) {
    auto order = agents;
    std::stable_sort(order.begin(), order.end(),
                     [&](AgentIndex x, AgentIndex y) { return b[x].lower < b[y].lower; });
    return order;
}

void richest_first(const GameInstance& game, std::vector<AgentIndex>& agents) {
    std::stable_sort(agents.begin(), agents.end(),
                     [&](AgentIndex x, AgentIndex y) { return game.endowment(x) > game.endowment(y); });
}

std::vector<AgentIndex> every_agent(const GameInstance& game) {
    std::vector<AgentIndex> all(game.size());
    std::iota(all.begin(), all.end(), AgentIndex{0});
    return all;
}

}  // namespace

Rational rho_bar(const GameInstance& game) { return Rational(1) / game.max_reward_level() - Rational(1); }

bool validate_external(const GameInstance& game, const ExternalPlan& plan) {
    if (plan.delta.sign() < 0) return false;
    if (plan.coalition.empty()) return plan.delta >= game.tau();
    const Rational funded = plan.coalition.total() + plan.delta;
    for (AgentIndex i : plan.coalition.members()) {
        const auto b = bounds(game, i);
        if (!(b.lower <= funded && funded < b.upper)) return false;
    }
    return true;
}

bool validate_matching(const GameInstance& game, const MatchingPlan& plan) {
    if (plan.coalition.empty() || plan.rate.sign() < 0 || plan.rate >= rho_bar(game)) return false;
    const Rational multiplier = Rational(1) + plan.rate;
    const Rational funded = multiplier * plan.coalition.total();
    for (AgentIndex i : plan.coalition.members()) {
        const auto b = bounds(game, i);
        if (!(b.lower <= funded && funded < game.tau() + multiplier * game.endowment(i))) return false;
    }
    return true;
}

std::vector<ExternalCandidate> external_candidates(const GameInstance& game) {
    const auto b = all_bounds(game);
    std::vector<AgentIndex> admissible;
    for (AgentIndex i = 0; i < game.size(); ++i) {
        if (b[i].admissible()) admissible.push_back(i);
    }

    std::vector<ExternalCandidate> out;
    for (AgentIndex level_agent : by_ascending_lower(admissible, b)) {
        const Rational& level = b[level_agent].lower;
        std::vector<AgentIndex> pool;
        for (AgentIndex k : admissible) {
            if (b[k].lower <= level && level < b[k].upper) pool.push_back(k);
        }
        richest_first(game, pool);

        std::vector<AgentIndex> admitted;
        Rational total;
        for (AgentIndex k : pool) {
            if (total + game.endowment(k) > level) break;
            admitted.push_back(k);
            total += game.endowment(k);
        }
        Coalition s(game, admitted);
        out.push_back({level_agent, level, std::move(admitted), ExternalPlan{std::move(s), level - total}});
    }
    return out;
}

ExternalPlan plan_external(const GameInstance& game) {
    const auto candidates = external_candidates(game);
    const ExternalCandidate* best = nullptr;
    for (const auto& c : candidates) {
        if (best == nullptr || c.plan.delta < best->plan.delta) best = &c;
    }
    if (best == nullptr || game.tau() < best->plan.delta) return ExternalPlan{Coalition{}, game.tau()};
    return best->plan;
}

std::vector<MatchingCandidate> matching_candidates(const GameInstance& game) {
    const auto b = all_bounds(game);
    const auto all = every_agent(game);

    std::vector<MatchingCandidate> out;
    for (AgentIndex level_agent : by_ascending_lower(all, b)) {
        const Rational& level = b[level_agent].lower;
        std::vector<AgentIndex> pool;
        for (AgentIndex k : all) {
            if (b[k].lower <= level) pool.push_back(k);
        }
        richest_first(game, pool);

        std::vector<AgentIndex> admitted;
        Rational total;
        Rational rate;
        for (AgentIndex k : pool) {
            const Rational grown = total + game.endowment(k);
            if (grown > level) break;
            // Only reachable when every pooled agent has zero endowment.
            if (grown.is_zero()) break;
            const Rational trial = level / grown - Rational(1);
            if (level >= game.tau() + (Rational(1) + trial) * game.endowment(k)) break;
            admitted.push_back(k);
            total = grown;
            rate = trial;
        }

        MatchingCandidate c{level_agent, level, admitted, std::nullopt};
        if (!admitted.empty()) c.plan = MatchingPlan{Coalition(game, std::move(admitted)), rate};
        out.push_back(std::move(c));
    }
    return out;
}

std::optional<MatchingPlan> plan_matching(const GameInstance& game, MatchingObjective objective) {
    const auto candidates = matching_candidates(game);
    const Rational budget = rho_bar(game);
    const MatchingPlan* best = nullptr;
    for (const auto& c : candidates) {
        // A candidate at or above the budget is not a valid plan, so it may
        // not shadow a cheaper-looking but affordable one.
        if (!c.plan || c.plan->rate >= budget) continue;
        if (best == nullptr) {
            best = &*c.plan;
            continue;
        }
        const bool better = objective == MatchingObjective::cost ? c.plan->cost() < best->cost()
                                                                 : c.plan->rate < best->rate;
        if (better) best = &*c.plan;
    }
    if (best == nullptr) return std::nullopt;
    return *best;
}

ExternalPlan oracle_external(const GameInstance& game) {
    std::uint64_t best_mask = 0;
    Rational best_delta = game.tau();
    detail::with_scaled_game(game, [&](const auto& g) {
        using Int = std::decay_t<decltype(g.tau)>;
        // (empty, tau) has mask 0, so it is the incumbent and keeps ties.
        Int best = g.tau;
        std::uint64_t mask_of_best = 0;
        detail::scan_subsets(g, detail::all_agents_mask(game.size()), [&](std::uint64_t mask, const auto& agg) {
            if (agg.max_lower >= agg.min_upper || agg.sum >= agg.min_upper) return true;
            Int delta = agg.max_lower - agg.sum;
            if (delta < 0) delta = 0;
            if (delta < best) {
                best = delta;
                mask_of_best = mask;
            }
            return true;
        });
        best_mask = mask_of_best;
        best_delta = detail::to_rational(best, g.scale);
    });
    return ExternalPlan{Coalition::from_mask(game, best_mask), best_delta};
}

std::optional<MatchingPlan> oracle_matching(const GameInstance& game, MatchingObjective objective) {
    const Rational top = game.max_reward_level();
    const mpz_class p = top.numerator();
    const mpz_class q = top.denominator();
    const mpz_class limit = mpz_class(1) << 62;
    const bool small_budget = p < limit && q < limit;

    std::optional<std::uint64_t> best_mask;
    Rational best_rate;
    detail::with_scaled_game(
        game,
        [&](const auto& g) {
            using Int = std::decay_t<decltype(g.tau)>;
            const Int bp = detail::from_mpz<Int>(p);
            const Int bq = detail::from_mpz<Int>(q);
            // Incumbent as funded total t and contribution e(S); rate = t/e - 1, cost = t - e.
            Int best_funded = 0;
            Int best_sum = 0;
            bool have = false;
            detail::scan_subsets(g, detail::all_agents_mask(game.size()), [&](std::uint64_t mask, const auto& agg) {
                if (agg.sum <= 0) return true;
                const Int funded = agg.sum < agg.max_lower ? agg.max_lower : agg.sum;
                // rate < rho_bar  <=>  funded * p < sum * q
                if (!(detail::wide_mul(funded, bp) < detail::wide_mul(agg.sum, bq))) return true;
                // funded < tau + (funded / sum) * min_e, multiplied through by sum
                if (!(detail::wide_mul(funded, agg.sum) <
                      detail::wide_mul(g.tau, agg.sum) + detail::wide_mul(funded, agg.min_endowment))) {
                    return true;
                }
                bool better = !have;
                if (have) {
                    if (objective == MatchingObjective::cost) {
                        better = funded - agg.sum < best_funded - best_sum;
                    } else {
                        better = detail::wide_mul(funded, best_sum) < detail::wide_mul(best_funded, agg.sum);
                    }
                }
                if (better) {
                    have = true;
                    best_funded = funded;
                    best_sum = agg.sum;
                    best_mask = mask;
                }
                return true;
            });
            if (have) {
                best_rate = detail::to_rational(best_funded, g.scale) / detail::to_rational(best_sum, g.scale) -
                            Rational(1);
            }
        },
        !small_budget);

    if (!best_mask) return std::nullopt;
    return MatchingPlan{Coalition::from_mask(game, *best_mask), best_rate};
}

MatchingPlan external_to_matching(const GameInstance& game, const ExternalPlan& plan) {
    if (plan.coalition.empty()) throw std::invalid_argument("external plan has an empty coalition");
    if (!validate_external(game, plan)) throw std::invalid_argument("external plan is not valid");
    if (!(plan.delta < rho_bar(game) * plan.coalition.total())) {
        throw std::invalid_argument("external investment " + plan.delta.str() +
                                    " breaches the matching budget rho_bar * e(S) = " +
                                    (rho_bar(game) * plan.coalition.total()).str());
    }
    return MatchingPlan{plan.coalition, plan.delta / plan.coalition.total()};
}

}  // namespace ppg
