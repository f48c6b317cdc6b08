#ifndef PPG_HARDNESS_HPP
#define PPG_HARDNESS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ppg/game.hpp"

namespace ppg {

/// 2T positive integers, stored in ascending order. original_position[k] is
/// where sorted value k sat in the caller's list (0-based).
struct PartitionInstance {
    std::vector<std::int64_t> values;
    std::vector<std::size_t> original_position;

    /// Sorts (stably) and validates: even length >= 2, every value >= 1.
    /// Throws std::invalid_argument.
    static PartitionInstance from_values(const std::vector<std::int64_t>& values);

    std::size_t half_count() const { return values.size() / 2; }
};

struct ReductionMeta {
    std::size_t half_count = 0;  // T
    mpz_class big_m;             // 100 * sum c
    mpz_class big_n;             // 100 * M * T
    Rational tau;
    std::vector<std::size_t> original_position;

    friend bool operator==(const ReductionMeta&, const ReductionMeta&) = default;
};

/// Game built from a PARTITION instance with 2T + 2 agents:
///   e_k = N + M + 2 c_k  (k < 2T, sorted order)
///   e_{2T} = N + 1, e_{2T+1} = N
///   tau = 1 + e_{2T} + (1/2) sum_{k<2T} e_k
///   m_k = e_k / (tau + N - 1)
/// It has a cooperative equilibrium iff the values split into two halves of
/// T elements with equal sums.
struct ReductionArtifact {
    GameInstance game;
    ReductionMeta meta;
};

ReductionArtifact gen_from_partition(const PartitionInstance& p);

/// Decodes an equilibrium of a generated game back into the caller-facing
/// (0-based, ascending) positions of T values summing to half the total.
/// Throws std::invalid_argument when s is not a cooperative equilibrium of
/// the game.
std::vector<std::size_t> extract_partition(const ReductionArtifact& art, const Coalition& s);

}  // namespace ppg

#endif  // PPG_HARDNESS_HPP
