#ifndef PPG_IO_HPP
#define PPG_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ppg/equilibrium.hpp"
#include "ppg/game.hpp"
#include "ppg/hardness.hpp"
#include "ppg/interventions.hpp"

// JSON documents exchanged by the command-line tool. Rationals travel as
// strings ("12", "0.35", "4/11") and are written back in lowest terms.
// Agent indices in documents are 1-based.
namespace ppg::io {

using json = nlohmann::json;

/// Malformed or schema-violating document.
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational rational_from_json(const json& value, const std::string& where);
inline json to_json(const Rational& r) { return r.str(); }

/// { "tau": r, "agents": [ { "endowment": r, "reward_level": r }, ... ] }.
/// Unknown top-level keys (e.g. "meta") are ignored.
GameInstance instance_from_json(const json& doc);
GameInstance parse_instance(std::string_view text);
json instance_to_json(const GameInstance& game);
std::string serialize_instance(const GameInstance& game);

json coalition_to_json(const Coalition& s);
Coalition coalition_from_json(const GameInstance& game, const json& indices);
/// "3,1,2" style list of 1-based indices, order preserved, converted to
/// 0-based. Duplicates are not rejected here.
std::vector<AgentIndex> parse_index_list(const GameInstance& game, std::string_view text);
/// "1,2,5" style list; an empty string is the empty coalition.
Coalition parse_coalition_list(const GameInstance& game, std::string_view text);
std::vector<Coalition> coalition_list_from_json(const GameInstance& game, const json& lists);

json report_to_json(const EquilibriumReport& report);
json rejection_to_json(const Rejection& rejection);

/// { "coalition": [...], "delta": r, "cost": r }
json external_plan_to_json(const ExternalPlan& plan);
ExternalPlan external_plan_from_json(const GameInstance& game, const json& doc);
/// { "coalition": [...], "rate": r, "cost": r }; "cost", when present, must
/// equal rate * e(S).
json matching_plan_to_json(const MatchingPlan& plan);
MatchingPlan matching_plan_from_json(const GameInstance& game, const json& doc);

/// { "values": [ints] }
PartitionInstance partition_from_json(const json& doc);

/// Instance document plus a "meta" object used to decode certificates.
json artifact_to_json(const ReductionArtifact& art);
/// Rebuilds the artifact and checks the game matches the construction.
ReductionArtifact artifact_from_json(const json& doc);

json parse_document(std::string_view text);

}  // namespace ppg::io

#endif  // PPG_IO_HPP
