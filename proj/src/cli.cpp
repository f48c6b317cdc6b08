#include "ppg/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "ppg/equilibrium.hpp"
#include "ppg/hardness.hpp"
#include "ppg/interventions.hpp"
#include "ppg/io.hpp"
#include "ppg/solvers.hpp"

namespace ppg::cli {

namespace {

using io::json;

struct Options {
    std::string input;
    std::string coalition;
    std::string certificate;
    std::string plan;
    std::string delta;
    std::string rate;
    std::string order;
    std::string kind = "external";
    std::string objective = "cost";
    std::string certify = "characterization";
    std::optional<std::size_t> limit;
    std::size_t max_n = 25;
    bool verify_balanced = false;
};

struct CommandResult {
    ExitCode status = kOk;
    json payload = json::object();
    std::vector<std::string> diagnostics;
};

class CommandError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path);
    if (!file) throw CommandError("cannot read input file '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

json read_json_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw CommandError("cannot read file '" + path + "'");
    return io::parse_document(std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()));
}

void guard_size(const GameInstance& game, std::size_t max_n) {
    if (game.size() > max_n) {
        throw CommandError("instance has " + std::to_string(game.size()) + " agents; exhaustive search is capped at " +
                           std::to_string(max_n) + " (raise --max-n)");
    }
}

MatchingObjective objective_of(const Options& opt) {
    return opt.objective == "rate" ? MatchingObjective::rate : MatchingObjective::cost;
}

std::string indices_text(const std::vector<AgentIndex>& agents) {
    std::string s;
    for (AgentIndex i : agents) s += (s.empty() ? "" : ", ") + std::to_string(i + 1);
    return s.empty() ? "nobody" : s;
}

CommandResult check_ne(const GameInstance& game, const Options& opt) {
    const Coalition s = io::parse_coalition_list(game, opt.coalition);
    if (s.empty()) throw CommandError("check-ne needs a nonempty --coalition");
    CommandResult r;
    if (opt.certify == "deviation-check") {
        if (auto report = certify_by_deviation(game, s)) {
            r.payload = io::report_to_json(*report);
        } else {
            r.status = kNone;
            r.payload = {{"coalition", io::coalition_to_json(s)}, {"total", io::to_json(s.total())}};
            r.diagnostics.push_back(s.total() < game.tau() ? "e(S) = " + s.total().str() + " is below tau = " +
                                                                 game.tau().str()
                                                           : "some agent gains by a unilateral deviation");
        }
        return r;
    }
    const auto verdict = is_cooperative_ne(game, s);
    if (const auto* report = std::get_if<EquilibriumReport>(&verdict)) {
        r.payload = io::report_to_json(*report);
        return r;
    }
    const auto& rej = std::get<Rejection>(verdict);
    r.status = kNone;
    r.payload = {{"coalition", io::coalition_to_json(s)},
                 {"total", io::to_json(s.total())},
                 {"violation", io::rejection_to_json(rej)}};
    r.diagnostics.push_back(rej.side == BoundSide::lower
                                ? "agent " + std::to_string(rej.agent + 1) + " violates the lower bound: e(S) = " +
                                      rej.total.str() + " < " + rej.bound.str()
                                : "agent " + std::to_string(rej.agent + 1) + " violates the upper bound: e(S) = " +
                                      rej.total.str() + " >= " + rej.bound.str());
    return r;
}

CommandResult enumerate_ne(const GameInstance& game, const Options& opt) {
    guard_size(game, opt.max_n);
    const auto found = enumerate_cooperative_ne(game, opt.limit);
    CommandResult r;
    json lists = json::array();
    for (const auto& s : found) lists.push_back(io::coalition_to_json(s));
    r.payload = {{"count", found.size()}, {"coalitions", std::move(lists)}};
    if (found.empty()) r.status = kNone;
    if (opt.limit && found.size() == *opt.limit) r.diagnostics.push_back("stopped at --limit");
    return r;
}

CommandResult coalition_result(const GameInstance& game, const std::optional<Coalition>& s) {
    CommandResult r;
    if (!s) {
        r.status = kNone;
        return r;
    }
    r.payload = {{"coalition", io::coalition_to_json(*s)}, {"total", io::to_json(s->total())}};
    const auto verdict = is_cooperative_ne(game, *s);
    if (const auto* report = std::get_if<EquilibriumReport>(&verdict)) {
        r.payload["report"] = io::report_to_json(*report);
    } else {
        r.diagnostics.push_back("returned coalition failed the equilibrium check");
    }
    return r;
}

CommandResult solve_low_ratio_cmd(const GameInstance& game, const Options& opt) {
    if (opt.order.empty()) return coalition_result(game, solve_low_ratio(game));
    const auto order = io::parse_index_list(game, opt.order);
    return coalition_result(game, solve_low_ratio(game, order));
}

CommandResult solve_balanced_cmd(const GameInstance& game, const Options& opt) {
    const auto outcome = decide_balanced(game, opt.verify_balanced);
    CommandResult r = coalition_result(game, outcome.coalition);
    r.payload["minimal_size"] = outcome.minimal_size;
    r.payload["swaps"] = outcome.swaps;
    return r;
}

CommandResult plan_external_cmd(const GameInstance& game, const Options&) {
    CommandResult r;
    r.payload = io::external_plan_to_json(plan_external(game));
    for (const auto& c : external_candidates(game)) {
        r.diagnostics.push_back("level of agent " + std::to_string(c.level_agent + 1) + " (" + c.level.str() +
                                "): admitted " + indices_text(c.admitted) + ", delta " + c.plan.delta.str());
    }
    return r;
}

CommandResult matching_result(const std::optional<MatchingPlan>& plan) {
    CommandResult r;
    if (!plan) {
        r.status = kNone;
        return r;
    }
    r.payload = io::matching_plan_to_json(*plan);
    return r;
}

CommandResult plan_matching_cmd(const GameInstance& game, const Options& opt) {
    CommandResult r = matching_result(plan_matching(game, objective_of(opt)));
    for (const auto& c : matching_candidates(game)) {
        r.diagnostics.push_back("level of agent " + std::to_string(c.level_agent + 1) + " (" + c.level.str() +
                                "): admitted " + indices_text(c.admitted) +
                                (c.plan ? ", rate " + c.plan->rate.str() + ", cost " + c.plan->cost().str() : ""));
    }
    if (r.status == kNone) r.diagnostics.push_back("no candidate rate is below rho_bar = " + rho_bar(game).str());
    return r;
}

CommandResult oracle_external_cmd(const GameInstance& game, const Options& opt) {
    guard_size(game, opt.max_n);
    CommandResult r;
    r.payload = io::external_plan_to_json(oracle_external(game));
    return r;
}

CommandResult oracle_matching_cmd(const GameInstance& game, const Options& opt) {
    guard_size(game, opt.max_n);
    return matching_result(oracle_matching(game, objective_of(opt)));
}

CommandResult validate_plan_cmd(const GameInstance& game, const Options& opt) {
    json doc;
    if (!opt.plan.empty()) {
        doc = read_json_file(opt.plan);
    } else {
        doc = {{"coalition", io::coalition_to_json(io::parse_coalition_list(game, opt.coalition))}};
        if (opt.kind == "external") {
            if (opt.delta.empty()) throw CommandError("validate-plan --kind external needs --plan or --delta");
            doc["delta"] = opt.delta;
        } else {
            if (opt.rate.empty()) throw CommandError("validate-plan --kind matching needs --plan or --rate");
            doc["rate"] = opt.rate;
        }
    }
    CommandResult r;
    bool valid = false;
    if (opt.kind == "external") {
        const auto plan = io::external_plan_from_json(game, doc);
        valid = validate_external(game, plan);
        r.payload = io::external_plan_to_json(plan);
    } else {
        const auto plan = io::matching_plan_from_json(game, doc);
        valid = validate_matching(game, plan);
        r.payload = io::matching_plan_to_json(plan);
        r.payload["rho_bar"] = io::to_json(rho_bar(game));
    }
    r.payload["valid"] = valid;
    if (!valid) r.status = kNone;
    return r;
}

CommandResult gen_hardness_cmd(const std::string& text) {
    CommandResult r;
    r.payload = io::artifact_to_json(gen_from_partition(io::partition_from_json(io::parse_document(text))));
    return r;
}

CommandResult decode_certificate_cmd(const std::string& text, const Options& opt) {
    const auto art = io::artifact_from_json(io::parse_document(text));
    Coalition s;
    if (!opt.certificate.empty()) {
        const json doc = read_json_file(opt.certificate);
        if (!doc.is_object() || !doc.contains("coalition")) throw CommandError("certificate lacks a 'coalition' field");
        s = io::coalition_from_json(art.game, doc["coalition"]);
    } else {
        s = io::parse_coalition_list(art.game, opt.coalition);
    }
    const auto positions = extract_partition(art, s);

    std::vector<std::int64_t> by_position(art.meta.original_position.size());
    for (std::size_t k = 0; k < by_position.size(); ++k) {
        const Rational c = (art.game.endowment(k) - Rational(art.meta.big_n) - Rational(art.meta.big_m)) / Rational(2);
        by_position[art.meta.original_position[k]] = c.numerator().get_si();
    }
    CommandResult r;
    json idx = json::array();
    json vals = json::array();
    mpz_class sum = 0;
    for (auto p : positions) {
        idx.push_back(p + 1);
        vals.push_back(by_position[p]);
        sum += mpz_class(static_cast<long>(by_position[p]));
    }
    r.payload = {{"value_indices", std::move(idx)}, {"values", std::move(vals)}, {"sum", sum.get_str()}};
    return r;
}

void emit(std::ostream& out, CommandResult r) {
    r.payload["status"] = r.status == kOk ? "ok" : "none";
    r.payload["diagnostics"] = r.diagnostics;
    out << r.payload.dump(2) << '\n';
}

int fail(std::ostream& err, const std::string& message) {
    err << json{{"status", "error"}, {"message", message}}.dump(2) << '\n';
    return kError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pivotal participation game solver"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input,-i", opt.input, "Input document (default: standard input)");
    };
    auto add_max_n = [&](CLI::App* sub) {
        sub->add_option("--max-n", opt.max_n, "Refuse exhaustive search above this many agents")->capture_default_str();
    };
    auto add_objective = [&](CLI::App* sub) {
        sub->add_option("--objective", opt.objective, "cost or rate")
            ->check(CLI::IsMember({"cost", "rate"}))
            ->capture_default_str();
    };

    auto* check = app.add_subcommand("check-ne", "Check whether a coalition is a cooperative equilibrium");
    add_input(check);
    check->add_option("--coalition,-c", opt.coalition, "Comma-separated 1-based agent indices")->required();
    check->add_option("--certify", opt.certify, "characterization or deviation-check")
        ->check(CLI::IsMember({"characterization", "deviation-check"}))
        ->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate-ne", "List every cooperative equilibrium");
    add_input(enumerate);
    add_max_n(enumerate);
    enumerate->add_option("--limit", opt.limit, "Stop after this many coalitions");

    auto* low = app.add_subcommand("solve-low-ratio", "Minimal coalition for games with e_i/m_i <= tau");
    add_input(low);
    low->add_option("--order", opt.order, "Greedy insertion order as 1-based indices");

    auto* balanced = app.add_subcommand("solve-balanced", "Decide balanced games");
    add_input(balanced);
    balanced->add_flag("--verify-balanced", opt.verify_balanced, "Check balancedness exhaustively (n <= 20)");

    auto* plan_ext = app.add_subcommand("plan-external", "Greedy external-investment plan");
    add_input(plan_ext);
    auto* plan_match = app.add_subcommand("plan-matching", "Greedy matching-fund plan");
    add_input(plan_match);
    add_objective(plan_match);
    auto* oracle_ext = app.add_subcommand("oracle-external", "Exact minimum external investment");
    add_input(oracle_ext);
    add_max_n(oracle_ext);
    auto* oracle_match = app.add_subcommand("oracle-matching", "Exact optimal matching fund");
    add_input(oracle_match);
    add_max_n(oracle_match);
    add_objective(oracle_match);

    auto* validate = app.add_subcommand("validate-plan", "Check an intervention plan");
    add_input(validate);
    validate->add_option("--kind", opt.kind, "external or matching")
        ->check(CLI::IsMember({"external", "matching"}))
        ->capture_default_str();
    validate->add_option("--plan", opt.plan, "Plan document");
    validate->add_option("--coalition,-c", opt.coalition, "Comma-separated 1-based agent indices");
    validate->add_option("--delta", opt.delta, "External investment");
    validate->add_option("--rate", opt.rate, "Matching rate");

    auto* gen = app.add_subcommand("gen-hardness", "Build a game from a PARTITION instance");
    add_input(gen);
    auto* decode = app.add_subcommand("decode-certificate", "Map an equilibrium of a generated game to a partition");
    add_input(decode);
    decode->add_option("--coalition,-c", opt.coalition, "Comma-separated 1-based agent indices");
    decode->add_option("--certificate", opt.certificate, "Document with a 'coalition' field");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        return fail(err, e.what());
    }

    try {
        const std::string text = read_input(opt.input, in);
        if (gen->parsed()) {
            emit(out, gen_hardness_cmd(text));
            return kOk;
        }
        if (decode->parsed()) {
            if (opt.coalition.empty() == opt.certificate.empty()) {
                throw CommandError("decode-certificate needs exactly one of --coalition or --certificate");
            }
            emit(out, decode_certificate_cmd(text, opt));
            return kOk;
        }

        const GameInstance game = io::parse_instance(text);
        CommandResult r;
        if (check->parsed()) r = check_ne(game, opt);
        else if (enumerate->parsed()) r = enumerate_ne(game, opt);
        else if (low->parsed()) r = solve_low_ratio_cmd(game, opt);
        else if (balanced->parsed()) r = solve_balanced_cmd(game, opt);
        else if (plan_ext->parsed()) r = plan_external_cmd(game, opt);
        else if (plan_match->parsed()) r = plan_matching_cmd(game, opt);
        else if (oracle_ext->parsed()) r = oracle_external_cmd(game, opt);
        else if (oracle_match->parsed()) r = oracle_matching_cmd(game, opt);
        else r = validate_plan_cmd(game, opt);
        const ExitCode code = r.status;
        emit(out, std::move(r));
        return code;
    } catch (const std::exception& e) {
        return fail(err, e.what());
    }
}

}  // namespace ppg::cli
