#include "ppg/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace ppg {

namespace {

std::string agent_label(AgentIndex i) { return "agent " + std::to_string(i + 1); }

void check_index(const GameInstance& game, AgentIndex i) {
    if (i >= game.size()) {
        throw std::out_of_range(agent_label(i) + " out of range (n = " + std::to_string(game.size()) + ")");
    }
}

}  // namespace

GameInstance::GameInstance(Rational tau, std::vector<Agent> agents)
    : tau_(std::move(tau)), agents_(std::move(agents)) {
    if (tau_.sign() <= 0) {
        throw std::invalid_argument("tau must be positive, got " + tau_.str());
    }
    if (agents_.empty()) throw std::invalid_argument("agent list is empty");
    for (AgentIndex i = 0; i < agents_.size(); ++i) {
        const auto& a = agents_[i];
        if (a.endowment.sign() < 0) {
            throw std::invalid_argument(agent_label(i) + ": endowment must be >= 0, got " + a.endowment.str());
        }
        if (a.reward_level.sign() <= 0 || a.reward_level >= Rational(1)) {
            throw std::invalid_argument(agent_label(i) + ": reward_level must lie in (0, 1), got " +
                                        a.reward_level.str());
        }
    }
}

const Agent& GameInstance::agent(AgentIndex i) const {
    check_index(*this, i);
    return agents_[i];
}

Rational GameInstance::total_endowment() const {
    Rational sum;
    for (const auto& a : agents_) sum += a.endowment;
    return sum;
}

Rational GameInstance::max_endowment() const {
    Rational best = agents_.front().endowment;
    for (const auto& a : agents_) best = max(best, a.endowment);
    return best;
}

Rational GameInstance::max_reward_level() const {
    Rational best = agents_.front().reward_level;
    for (const auto& a : agents_) best = max(best, a.reward_level);
    return best;
}

Coalition::Coalition(const GameInstance& game, std::vector<AgentIndex> members)
    : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
        throw std::invalid_argument("coalition lists an agent twice");
    }
    for (AgentIndex i : members_) {
        check_index(game, i);
        total_ += game.endowment(i);
    }
}

Coalition Coalition::from_mask(const GameInstance& game, std::uint64_t mask) {
    if (game.size() > 64) throw std::length_error("bitmask coalitions need n <= 64");
    if (game.size() < 64 && (mask >> game.size()) != 0) {
        throw std::out_of_range("coalition mask selects agents beyond n");
    }
    std::vector<AgentIndex> members;
    for (AgentIndex i = 0; i < game.size(); ++i) {
        if ((mask >> i) & 1U) members.push_back(i);
    }
    return Coalition(game, std::move(members));
}

bool Coalition::contains(AgentIndex i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

std::uint64_t Coalition::mask() const {
    std::uint64_t m = 0;
    for (AgentIndex i : members_) {
        if (i >= 64) throw std::length_error("bitmask coalitions need n <= 64");
        m |= std::uint64_t{1} << i;
    }
    return m;
}

Coalition Coalition::with(const GameInstance& game, AgentIndex i) const {
    if (contains(i)) return *this;
    auto members = members_;
    members.push_back(i);
    return Coalition(game, std::move(members));
}

Coalition Coalition::without(const GameInstance& game, AgentIndex i) const {
    auto members = members_;
    members.erase(std::remove(members.begin(), members.end(), i), members.end());
    return Coalition(game, std::move(members));
}

AgentBounds bounds(const GameInstance& game, AgentIndex i) {
    const auto& a = game.agent(i);
    return {max(game.tau(), a.endowment / a.reward_level), game.tau() + a.endowment};
}

std::vector<AgentBounds> all_bounds(const GameInstance& game) {
    std::vector<AgentBounds> out;
    out.reserve(game.size());
    for (AgentIndex i = 0; i < game.size(); ++i) out.push_back(bounds(game, i));
    return out;
}

Rational utility(const GameInstance& game, const Coalition& s, AgentIndex i) {
    return utility_with_investment(game, s, i, Rational(0));
}

Rational utility_with_investment(const GameInstance& game, const Coalition& s, AgentIndex i,
                                 const Rational& delta) {
    const auto& a = game.agent(i);
    Rational u = s.contains(i) ? Rational(0) : a.endowment;
    const Rational funded = s.total() + delta;
    if (funded >= game.tau()) u += a.reward_level * funded;
    return u;
}

Rational utility_with_matching(const GameInstance& game, const Coalition& s, AgentIndex i,
                               const Rational& rho) {
    const auto& a = game.agent(i);
    Rational u = s.contains(i) ? Rational(0) : a.endowment;
    const Rational funded = (Rational(1) + rho) * s.total();
    if (funded >= game.tau()) u += a.reward_level * funded;
    return u;
}

}  // namespace ppg
