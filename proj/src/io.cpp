#include "ppg/io.hpp"

#include <charconv>
#include <string>

namespace ppg::io {

namespace {

const json& require(const json& doc, const char* key, const std::string& where) {
    if (!doc.is_object()) throw DocumentError(where + ": expected an object");
    auto it = doc.find(key);
    if (it == doc.end()) throw DocumentError(where + ": missing field '" + key + "'");
    return *it;
}

std::string agent_where(std::size_t i) { return "agent " + std::to_string(i + 1); }

AgentIndex index_from_json(const GameInstance& game, const json& v) {
    if (!v.is_number_integer()) throw DocumentError("coalition entries must be integers");
    const auto raw = v.get<std::int64_t>();
    if (raw < 1 || static_cast<std::uint64_t>(raw) > game.size()) {
        throw DocumentError("coalition index " + std::to_string(raw) + " outside 1.." + std::to_string(game.size()));
    }
    return static_cast<AgentIndex>(raw - 1);
}

}  // namespace

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("malformed document: ") + e.what());
    }
}

Rational rational_from_json(const json& value, const std::string& where) {
    try {
        if (value.is_string()) return Rational::parse(value.get<std::string>());
        if (value.is_number_integer()) return Rational(static_cast<long>(value.get<std::int64_t>()));
    } catch (const std::exception& e) {
        throw DocumentError(where + ": " + e.what());
    }
    throw DocumentError(where + ": expected a rational string such as \"12\", \"0.35\" or \"4/11\"");
}

GameInstance instance_from_json(const json& doc) {
    const Rational tau = rational_from_json(require(doc, "tau", "instance"), "tau");
    const json& list = require(doc, "agents", "instance");
    if (!list.is_array()) throw DocumentError("instance: 'agents' must be an array");

    std::vector<Agent> agents;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const auto where = agent_where(i);
        agents.push_back({rational_from_json(require(list[i], "endowment", where), where + ": endowment"),
                          rational_from_json(require(list[i], "reward_level", where), where + ": reward_level")});
    }
    try {
        return GameInstance(tau, std::move(agents));
    } catch (const std::invalid_argument& e) {
        throw DocumentError(e.what());
    }
}

GameInstance parse_instance(std::string_view text) { return instance_from_json(parse_document(text)); }

json instance_to_json(const GameInstance& game) {
    json agents = json::array();
    for (const auto& a : game.agents()) {
        agents.push_back({{"endowment", to_json(a.endowment)}, {"reward_level", to_json(a.reward_level)}});
    }
    return {{"tau", to_json(game.tau())}, {"agents", std::move(agents)}};
}

std::string serialize_instance(const GameInstance& game) { return instance_to_json(game).dump(2); }

json coalition_to_json(const Coalition& s) {
    json out = json::array();
    for (AgentIndex i : s.members()) out.push_back(i + 1);
    return out;
}

Coalition coalition_from_json(const GameInstance& game, const json& indices) {
    if (!indices.is_array()) throw DocumentError("coalition must be an array of 1-based indices");
    std::vector<AgentIndex> members;
    for (const auto& v : indices) members.push_back(index_from_json(game, v));
    try {
        return Coalition(game, std::move(members));
    } catch (const std::invalid_argument& e) {
        throw DocumentError(e.what());
    }
}

std::vector<AgentIndex> parse_index_list(const GameInstance& game, std::string_view text) {
    std::vector<AgentIndex> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        auto token = text.substr(0, comma);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        std::int64_t value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
            throw DocumentError("index list entry '" + std::string(token) + "' is not an integer");
        }
        out.push_back(index_from_json(game, value));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

Coalition parse_coalition_list(const GameInstance& game, std::string_view text) {
    try {
        return Coalition(game, parse_index_list(game, text));
    } catch (const std::invalid_argument& e) {
        throw DocumentError(e.what());
    }
}

std::vector<Coalition> coalition_list_from_json(const GameInstance& game, const json& lists) {
    if (!lists.is_array()) throw DocumentError("expected an array of coalitions");
    std::vector<Coalition> out;
    for (const auto& s : lists) out.push_back(coalition_from_json(game, s));
    return out;
}

json report_to_json(const EquilibriumReport& report) {
    json slack = json::array();
    for (const auto& m : report.slack) {
        slack.push_back({{"agent", m.agent + 1},
                         {"above_lower", to_json(m.above_lower)},
                         {"below_upper", to_json(m.below_upper)}});
    }
    return {{"coalition", coalition_to_json(report.coalition)},
            {"total", to_json(report.coalition.total())},
            {"certified_by",
             report.certified_by == Certification::characterization ? "characterization" : "deviation-check"},
            {"slack", std::move(slack)}};
}

json rejection_to_json(const Rejection& rejection) {
    return {{"agent", rejection.agent + 1},
            {"side", rejection.side == BoundSide::lower ? "lower" : "upper"},
            {"total", to_json(rejection.total)},
            {"bound", to_json(rejection.bound)}};
}

json external_plan_to_json(const ExternalPlan& plan) {
    return {{"coalition", coalition_to_json(plan.coalition)},
            {"delta", to_json(plan.delta)},
            {"cost", to_json(plan.delta)}};
}

ExternalPlan external_plan_from_json(const GameInstance& game, const json& doc) {
    ExternalPlan plan{coalition_from_json(game, require(doc, "coalition", "external plan")),
                      rational_from_json(require(doc, "delta", "external plan"), "delta")};
    if (doc.contains("cost") && rational_from_json(doc["cost"], "cost") != plan.delta) {
        throw DocumentError("external plan: cost must equal delta");
    }
    return plan;
}

json matching_plan_to_json(const MatchingPlan& plan) {
    return {{"coalition", coalition_to_json(plan.coalition)},
            {"rate", to_json(plan.rate)},
            {"cost", to_json(plan.cost())}};
}

MatchingPlan matching_plan_from_json(const GameInstance& game, const json& doc) {
    MatchingPlan plan{coalition_from_json(game, require(doc, "coalition", "matching plan")),
                      rational_from_json(require(doc, "rate", "matching plan"), "rate")};
    if (doc.contains("cost") && rational_from_json(doc["cost"], "cost") != plan.cost()) {
        throw DocumentError("matching plan: cost must equal rate * e(S)");
    }
    return plan;
}

PartitionInstance partition_from_json(const json& doc) {
    const json& values = require(doc, "values", "partition");
    if (!values.is_array()) throw DocumentError("partition: 'values' must be an array of integers");
    std::vector<std::int64_t> raw;
    for (const auto& v : values) {
        if (!v.is_number_integer()) throw DocumentError("partition: 'values' must be an array of integers");
        raw.push_back(v.get<std::int64_t>());
    }
    try {
        return PartitionInstance::from_values(raw);
    } catch (const std::invalid_argument& e) {
        throw DocumentError(e.what());
    }
}

json artifact_to_json(const ReductionArtifact& art) {
    json doc = instance_to_json(art.game);
    json positions = json::array();
    for (auto k : art.meta.original_position) positions.push_back(k + 1);
    doc["meta"] = {{"T", art.meta.half_count},
                   {"M", art.meta.big_m.get_str()},
                   {"N", art.meta.big_n.get_str()},
                   {"tau", to_json(art.meta.tau)},
                   {"original_positions", std::move(positions)}};
    return doc;
}

ReductionArtifact artifact_from_json(const json& doc) {
    const GameInstance game = instance_from_json(doc);
    const json& meta = require(doc, "meta", "generated instance");
    const json& positions = require(meta, "original_positions", "meta");
    const json& half = require(meta, "T", "meta");
    if (!half.is_number_unsigned() || !positions.is_array()) throw DocumentError("meta: malformed");
    const auto half_count = half.get<std::size_t>();
    if (game.size() != 2 * half_count + 2 || positions.size() != 2 * half_count) {
        throw DocumentError("meta: T does not match the number of agents");
    }
    const Rational big_m = rational_from_json(require(meta, "M", "meta"), "meta.M");
    const Rational big_n = rational_from_json(require(meta, "N", "meta"), "meta.N");

    // Recover c_k = (e_k - N - M) / 2 and regenerate to make sure the game
    // really is the construction it claims to be.
    std::vector<std::int64_t> values(2 * half_count);
    for (std::size_t k = 0; k < 2 * half_count; ++k) {
        const Rational c = (game.endowment(k) - big_n - big_m) / Rational(2);
        if (!positions[k].is_number_unsigned()) throw DocumentError("meta: malformed original_positions");
        const auto pos = positions[k].get<std::size_t>();
        if (!c.is_integer() || c.sign() <= 0 || !c.numerator().fits_slong_p() || pos < 1 || pos > values.size()) {
            throw DocumentError("meta: endowments do not match the PARTITION construction");
        }
        values[pos - 1] = c.numerator().get_si();
    }
    ReductionArtifact rebuilt = [&] {
        try {
            return gen_from_partition(PartitionInstance::from_values(values));
        } catch (const std::invalid_argument& e) {
            throw DocumentError(std::string("meta: ") + e.what());
        }
    }();
    if (!(rebuilt.game == game) || rebuilt.meta.tau != rational_from_json(require(meta, "tau", "meta"), "meta.tau")) {
        throw DocumentError("meta: game does not match the PARTITION construction");
    }
    return rebuilt;
}

}  // namespace ppg::io
