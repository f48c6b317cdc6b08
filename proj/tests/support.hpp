#ifndef PPG_TESTS_SUPPORT_HPP
#define PPG_TESTS_SUPPORT_HPP

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// here work directly on Rational utilities and validators, never through the
// scaled integer subset scan used by the library.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ppg/equilibrium.hpp"
#include "ppg/game.hpp"
#include "ppg/interventions.hpp"
#include "ppg/solvers.hpp"

namespace ppg::testing {

inline Rational q(const char* text) { return Rational::parse(text); }

inline GameInstance make_game(const char* tau, const std::vector<std::pair<const char*, const char*>>& agents) {
    std::vector<Agent> list;
    for (const auto& [e, m] : agents) list.push_back({q(e), q(m)});
    return GameInstance(q(tau), std::move(list));
}

/// e = (2,2,2,9), m = (0.2,0.2,0.2,0.5), tau = 10.
inline GameInstance example_one() {
    return make_game("10", {{"2", "0.2"}, {"2", "0.2"}, {"2", "0.2"}, {"9", "0.5"}});
}

/// tau = 12, fifteen agents with m = 0.35: ten with e = 2 then five with e = 5.
inline GameInstance figure_one() {
    std::vector<std::pair<const char*, const char*>> agents(10, {"2", "0.35"});
    agents.insert(agents.end(), 5, {"5", "0.35"});
    return make_game("12", agents);
}

/// tau = 11, e = (3,3,3), m = (0.2,0.2,0.2).
inline GameInstance three_threes() { return make_game("11", {{"3", "0.2"}, {"3", "0.2"}, {"3", "0.2"}}); }

/// tau = 9, e = (4,4,4), m = (4/11,4/11,4/11).
inline GameInstance harm_game() { return make_game("9", {{"4", "4/11"}, {"4", "4/11"}, {"4", "4/11"}}); }

inline std::vector<Coalition> all_coalitions(const GameInstance& game) {
    std::vector<Coalition> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << game.size()); ++mask) {
        out.push_back(Coalition::from_mask(game, mask));
    }
    return out;
}

inline std::vector<std::uint64_t> masks_of(const std::vector<Coalition>& list) {
    std::vector<std::uint64_t> out;
    for (const auto& s : list) out.push_back(s.mask());
    return out;
}

/// Nonempty coalitions that pass the deviation check and reach tau, in
/// ascending bitmask order.
inline std::vector<Coalition> enumerate_by_deviation(const GameInstance& game) {
    std::vector<Coalition> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << game.size()); ++mask) {
        const auto s = Coalition::from_mask(game, mask);
        if (s.total() >= game.tau() && deviation_check(game, s)) out.push_back(s);
    }
    return out;
}

/// Minimum external investment: every coalition at its closed-form least
/// delta, kept only if validate_external accepts it.
inline Rational brute_external_optimum(const GameInstance& game) {
    Rational best = game.tau();
    for (const auto& s : all_coalitions(game)) {
        if (s.empty()) continue;
        Rational top = bounds(game, s.members().front()).lower;
        for (AgentIndex i : s.members()) top = max(top, bounds(game, i).lower);
        const Rational delta = max(Rational(0), top - s.total());
        if (validate_external(game, {s, delta}) && delta < best) best = delta;
    }
    return best;
}

/// Optimal matching objective value over coalitions at their least rate,
/// using validate_matching as the judge.
inline std::optional<Rational> brute_matching_optimum(const GameInstance& game, MatchingObjective objective) {
    std::optional<Rational> best;
    for (const auto& s : all_coalitions(game)) {
        if (s.empty() || s.total().is_zero()) continue;
        Rational top = bounds(game, s.members().front()).lower;
        for (AgentIndex i : s.members()) top = max(top, bounds(game, i).lower);
        const Rational rate = max(Rational(0), top / s.total() - Rational(1));
        const MatchingPlan plan{s, rate};
        if (!validate_matching(game, plan)) continue;
        const Rational value = objective == MatchingObjective::cost ? plan.cost() : plan.rate;
        if (!best || value < *best) best = value;
    }
    return best;
}

/// Rationals k/d with d drawn from a small set, so numbers stay readable
/// while denominators still mix.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    Rational uniform(const Rational& lo, const Rational& hi) {
        static constexpr long kDenoms[] = {1, 2, 3, 4, 5, 10};
        const long d = kDenoms[pick(0, 5)];
        const Rational lo_scaled = lo * Rational(d);
        const Rational hi_scaled = hi * Rational(d);
        const long a = ceil_long(lo_scaled);
        const long b = floor_long(hi_scaled);
        return Rational(mpz_class(pick(a, b)), mpz_class(d));
    }

    Rational reward_level() {
        const long den = pick(2, 20);
        return Rational(mpz_class(pick(1, den - 1)), mpz_class(den));
    }

    /// n in [1, max_n], e_i in [0, 20], m_i in (0, 1), tau in (0, 1.2 sum e].
    GameInstance random_game(std::size_t max_n) {
        const auto n = static_cast<std::size_t>(pick(1, static_cast<long>(max_n)));
        std::vector<Agent> agents;
        Rational total;
        for (std::size_t i = 0; i < n; ++i) {
            agents.push_back({uniform(0, 20), reward_level()});
            total += agents.back().endowment;
        }
        return GameInstance(random_tau(total), std::move(agents));
    }

    Rational random_tau(const Rational& total) {
        const Rational cap = total.is_zero() ? Rational(1) : total * Rational(6) / Rational(5);
        for (;;) {
            Rational t = uniform(0, cap);
            if (t.sign() > 0) return t;
        }
    }

    /// Every e_i/m_i <= tau <= sum e. Endowments may be zero.
    GameInstance low_ratio_game(std::size_t max_n) {
        for (;;) {
            const auto n = static_cast<std::size_t>(pick(1, static_cast<long>(max_n)));
            std::vector<Agent> agents;
            Rational total;
            Rational ratio;
            for (std::size_t i = 0; i < n; ++i) {
                const long den = pick(2, 20);
                agents.push_back({uniform(0, 20), Rational(mpz_class(pick(den / 2, den - 1)), mpz_class(den))});
                total += agents.back().endowment;
                ratio = max(ratio, agents.back().endowment / agents.back().reward_level);
            }
            const Rational lo = ratio.sign() > 0 ? ratio : Rational(1, 10);
            if (lo > total) continue;
            return GameInstance(lo + (total - lo) * Rational(mpz_class(pick(0, 10)), mpz_class(10)), std::move(agents));
        }
    }

    /// A game whose minimal coalitions all share one size, with sum e >= tau.
    /// Endowments cluster around a base value so that balance is common;
    /// candidates are filtered with the exhaustive check.
    GameInstance balanced_game(std::size_t max_n) {
        for (;;) {
            const auto n = static_cast<std::size_t>(pick(1, static_cast<long>(max_n)));
            const long base = pick(2, 12);
            const long spread = pick(0, 2);
            std::vector<Agent> agents;
            Rational total;
            for (std::size_t i = 0; i < n; ++i) {
                agents.push_back({Rational(base + pick(0, spread)), reward_level()});
                total += agents.back().endowment;
            }
            GameInstance game(random_tau(total), std::move(agents));
            if (game.tau() <= total && is_balanced(game)) return game;
        }
    }

    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    std::vector<AgentIndex> shuffled_order(std::size_t n) {
        std::vector<AgentIndex> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng_);
        return order;
    }

private:
    static long floor_long(const Rational& r) {
        mpz_class out;
        mpz_fdiv_q(out.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
        return out.get_si();
    }
    static long ceil_long(const Rational& r) {
        mpz_class out;
        mpz_cdiv_q(out.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
        return out.get_si();
    }

    std::mt19937_64 rng_;
};

}  // namespace ppg::testing

#endif  // PPG_TESTS_SUPPORT_HPP
