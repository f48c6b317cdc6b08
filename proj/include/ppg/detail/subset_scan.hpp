#ifndef PPG_DETAIL_SUBSET_SCAN_HPP
#define PPG_DETAIL_SUBSET_SCAN_HPP

// Exhaustive subset scans over an integer image of a game.
//
// Multiplying tau, every e_i and every l_i = max{tau, e_i/m_i} by the lcm of
// their denominators turns all bound checks into integer comparisons. When
// the scaled magnitudes stay below 2^62 the scan runs on int64_t (products
// go through __int128); otherwise it falls back to mpz_class. Both paths are
// exact, they only differ in speed.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "ppg/game.hpp"

namespace ppg::detail {

inline constexpr std::size_t kMaxScanAgents = 62;

template <class Int>
struct ScaledGame {
    Int tau;
    std::vector<Int> endowment;
    std::vector<Int> lower;
    std::vector<Int> upper;
    mpz_class scale;  // common denominator the values were multiplied by
};

template <class Int>
struct SubsetAggregate {
    Int sum;
    Int max_lower;
    Int min_upper;
    Int min_endowment;
    int size = 0;
};

inline mpz_class common_denominator(const GameInstance& game, const std::vector<AgentBounds>& b) {
    mpz_class d = game.tau().denominator();
    for (std::size_t i = 0; i < game.size(); ++i) {
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), game.endowment(i).denominator().get_mpz_t());
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), b[i].lower.denominator().get_mpz_t());
    }
    return d;
}

inline mpz_class scale_exact(const Rational& r, const mpz_class& d) {
    return r.numerator() * (d / r.denominator());
}

/// True when every scaled value and the scaled total endowment fit below
/// 2^62, so sums of two such values cannot overflow int64_t.
inline bool fits_int64(const GameInstance& game, const std::vector<AgentBounds>& b, const mpz_class& d) {
    const mpz_class limit = mpz_class(1) << 62;
    mpz_class total = 0;
    for (std::size_t i = 0; i < game.size(); ++i) {
        total += scale_exact(game.endowment(i), d);
        if (scale_exact(b[i].lower, d) >= limit || scale_exact(b[i].upper, d) >= limit) return false;
    }
    return total < limit && scale_exact(game.tau(), d) < limit;
}

template <class Int>
Int from_mpz(const mpz_class& z) {
    if constexpr (std::is_same_v<Int, std::int64_t>) {
        return static_cast<std::int64_t>(z.get_si());
    } else {
        return z;
    }
}

template <class Int>
ScaledGame<Int> scale_game(const GameInstance& game, const std::vector<AgentBounds>& b, const mpz_class& d) {
    ScaledGame<Int> g;
    g.scale = d;
    g.tau = from_mpz<Int>(scale_exact(game.tau(), d));
    for (std::size_t i = 0; i < game.size(); ++i) {
        g.endowment.push_back(from_mpz<Int>(scale_exact(game.endowment(i), d)));
        g.lower.push_back(from_mpz<Int>(scale_exact(b[i].lower, d)));
        g.upper.push_back(from_mpz<Int>(scale_exact(b[i].upper, d)));
    }
    return g;
}

/// Exact product, widened so int64_t operands cannot overflow.
inline __int128 wide_mul(std::int64_t a, std::int64_t b) { return static_cast<__int128>(a) * b; }
inline mpz_class wide_mul(const mpz_class& a, const mpz_class& b) { return a * b; }

inline Rational to_rational(std::int64_t v, const mpz_class& scale) {
    return Rational(mpz_class(static_cast<long>(v)), scale);
}
inline Rational to_rational(const mpz_class& v, const mpz_class& scale) { return Rational(v, scale); }

/// Calls visit(mask, aggregate) for every nonempty submask of `universe`
/// in ascending numeric order. visit returns false to stop early.
template <class Int, class Visit>
void scan_subsets(const ScaledGame<Int>& g, std::uint64_t universe, Visit&& visit) {
    SubsetAggregate<Int> agg;
    for (std::uint64_t s = (0 - universe) & universe; s != 0; s = (s - universe) & universe) {
        bool first = true;
        agg.sum = 0;
        agg.size = 0;
        for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
            const auto i = static_cast<std::size_t>(__builtin_ctzll(rest));
            agg.sum += g.endowment[i];
            ++agg.size;
            if (first) {
                agg.max_lower = g.lower[i];
                agg.min_upper = g.upper[i];
                agg.min_endowment = g.endowment[i];
                first = false;
            } else {
                if (agg.max_lower < g.lower[i]) agg.max_lower = g.lower[i];
                if (g.upper[i] < agg.min_upper) agg.min_upper = g.upper[i];
                if (g.endowment[i] < agg.min_endowment) agg.min_endowment = g.endowment[i];
            }
        }
        if (!visit(s, static_cast<const SubsetAggregate<Int>&>(agg))) return;
    }
}

/// Builds the integer image and hands it to body(scaled) on the fastest
/// exact representation available. force_bignum pins the mpz_class path.
template <class Body>
void with_scaled_game(const GameInstance& game, Body&& body, bool force_bignum = false) {
    if (game.size() > kMaxScanAgents) {
        throw std::length_error("exhaustive subset scan supports at most 62 agents");
    }
    const auto b = all_bounds(game);
    const mpz_class d = common_denominator(game, b);
    if (!force_bignum && fits_int64(game, b, d)) {
        body(scale_game<std::int64_t>(game, b, d));
    } else {
        body(scale_game<mpz_class>(game, b, d));
    }
}

inline std::uint64_t all_agents_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace ppg::detail

#endif  // PPG_DETAIL_SUBSET_SCAN_HPP
