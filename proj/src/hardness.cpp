#include "ppg/hardness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <variant>

#include "ppg/equilibrium.hpp"

namespace ppg {

PartitionInstance PartitionInstance::from_values(const std::vector<std::int64_t>& values) {
    if (values.size() < 2 || values.size() % 2 != 0) {
        throw std::invalid_argument("partition needs an even number (>= 2) of values, got " +
                                    std::to_string(values.size()));
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] < 1) {
            throw std::invalid_argument("partition value " + std::to_string(k + 1) + " must be >= 1, got " +
                                        std::to_string(values[k]));
        }
    }
    PartitionInstance p;
    p.original_position.resize(values.size());
    std::iota(p.original_position.begin(), p.original_position.end(), std::size_t{0});
    std::stable_sort(p.original_position.begin(), p.original_position.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    for (std::size_t k : p.original_position) p.values.push_back(values[k]);
    return p;
}

ReductionArtifact gen_from_partition(const PartitionInstance& p) {
    if (p.values.size() < 2 || p.values.size() % 2 != 0 || p.original_position.size() != p.values.size() ||
        !std::is_sorted(p.values.begin(), p.values.end()) || p.values.front() < 1) {
        throw std::invalid_argument("partition instance must hold 2T >= 2 ascending positive values");
    }
    const std::size_t half = p.half_count();

    mpz_class sum_c = 0;
    for (auto c : p.values) sum_c += mpz_class(static_cast<long>(c));
    const mpz_class big_m = 100 * sum_c;
    const mpz_class big_n = 100 * big_m * static_cast<unsigned long>(half);

    std::vector<mpz_class> e;
    for (auto c : p.values) e.push_back(big_n + big_m + 2 * mpz_class(static_cast<long>(c)));
    mpz_class sum_first = 0;
    for (const auto& v : e) sum_first += v;
    e.push_back(big_n + 1);
    e.push_back(big_n);

    // sum_first is a multiple of 4, so tau is an integer.
    const mpz_class tau = 1 + e[2 * half] + sum_first / 2;
    const mpz_class pinned = tau + big_n - 1;

    std::vector<Agent> agents;
    for (const auto& v : e) agents.push_back({Rational(v), Rational(v, pinned)});

    ReductionMeta meta{half, big_m, big_n, Rational(tau), p.original_position};
    return {GameInstance(Rational(tau), std::move(agents)), std::move(meta)};
}

std::vector<std::size_t> extract_partition(const ReductionArtifact& art, const Coalition& s) {
    if (s.empty() || !std::holds_alternative<EquilibriumReport>(is_cooperative_ne(art.game, s))) {
        throw std::invalid_argument("coalition is not a cooperative equilibrium of the generated game");
    }
    const std::size_t half = art.meta.half_count;
    std::vector<std::size_t> picked;
    for (AgentIndex i : s.members()) {
        if (i < 2 * half) picked.push_back(i);
    }

    // e_k = N + M + 2 c_k recovers c_k.
    mpz_class picked_sum = 0;
    mpz_class total = 0;
    for (std::size_t k = 0; k < 2 * half; ++k) {
        const mpz_class c = (art.game.endowment(k).numerator() - art.meta.big_n - art.meta.big_m) / 2;
        total += c;
        if (std::find(picked.begin(), picked.end(), k) != picked.end()) picked_sum += c;
    }
    if (picked.size() != half || 2 * picked_sum != total) {
        throw std::logic_error("equilibrium does not decode to a balanced partition");
    }

    std::vector<std::size_t> positions;
    for (std::size_t k : picked) positions.push_back(art.meta.original_position.at(k));
    std::sort(positions.begin(), positions.end());
    return positions;
}

}  // namespace ppg
