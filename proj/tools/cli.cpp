/*
    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include "cli.hpp"

#include <odrl/comparator.hpp>
#include <odrl/error.hpp>
#include <odrl/evaluator.hpp>
#include <odrl/io/policy_io.hpp>
#include <odrl/io/report_io.hpp>
#include <odrl/io/schema_io.hpp>
#include <odrl/io/world_io.hpp>
#include <odrl/matcher.hpp>
#include <odrl/query_emitter.hpp>
#include <odrl/reasoner.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace odrl::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kError = 2;

struct Inputs {
    std::string policy;
    std::string requester;
    std::string provider;
    std::string world;
    std::string schema;
    std::string vocab;
    std::string mode = "asymmetric";
    std::string outDir;
    bool full = false;
    bool normalize = false;
};

FullPolicy loadPolicy(const std::string& path, const FeatureSchema& schema, bool enforce = true) {
    return io::parsePolicy(io::readFile(path), schema, {enforce});
}

LitePolicy requireLite(const FullPolicy& p, const std::string& path) {
    if (!p.isLite())
        throw PolicyError("unsupported-policy", "'" + path +
                                                    "' has duties, remedies or consequences; only policies made of "
                                                    "permissions, prohibitions and obligations can be compared");
    return p.lite();
}

FullPolicy maybeSaturate(FullPolicy p, const Inputs& in) {
    if (in.vocab.empty()) return p;
    return saturate(p, io::parseVocabulary(io::readFile(in.vocab)));
}

int evaluate(const Inputs& in, std::ostream& out, std::ostream& err) {
    const auto schema = io::parseSchema(io::readFile(in.schema));
    const auto policy = maybeSaturate(loadPolicy(in.policy, schema), in);
    const auto world = io::parseWorld(io::readFile(in.world), schema);
    if (!in.full && !policy.isLite())
        err << "note: duties, remedies and consequences are ignored without --full\n";
    const auto report = in.full ? evaluateFull(policy, world, schema) : evaluateLite(policy.lite(), world, schema);
    out << io::reportToJson(report, schema);
    return report.valid() ? kOk : kFound;
}

int compare(const Inputs& in, std::ostream& out, std::ostream&) {
    const auto schema = io::parseSchema(io::readFile(in.schema));
    const auto requester = requireLite(maybeSaturate(loadPolicy(in.requester, schema), in), in.requester);
    const auto provider = requireLite(maybeSaturate(loadPolicy(in.provider, schema), in), in.provider);
    CompareOptions options;
    options.autoNormalize = in.normalize;
    const auto verdict = in.mode == "symmetric" ? symmetricConflict(requester, provider, schema, options)
                                                : asymmetricConflict(requester, provider, schema, options);
    out << io::verdictToJson(verdict, schema);
    return verdict.conflict() ? kFound : kOk;
}

int normalizeCommand(const Inputs& in, std::ostream& out, std::ostream&) {
    const auto schema = io::parseSchema(io::readFile(in.schema));
    const auto policy = requireLite(loadPolicy(in.policy, schema), in.policy);
    out << io::serializePolicy(normalize(policy, schema), schema);
    return kOk;
}

int saturateCommand(const Inputs& in, std::ostream& out, std::ostream&) {
    const auto schema = io::parseSchema(io::readFile(in.schema));
    const auto policy = maybeSaturate(loadPolicy(in.policy, schema), in);
    out << io::serializePolicy(policy, schema);
    return kOk;
}

int emitQuery(const Inputs& in, std::ostream& out, std::ostream& err) {
    const auto schema = io::parseSchema(io::readFile(in.schema));
    const auto policy = loadPolicy(in.policy, schema);
    const auto q = in.full ? emitViolationQueries(policy, schema) : emitViolationQueries(policy.lite(), schema);
    std::vector<std::pair<std::string, std::string>> files{{"world.sql", q.ddl},
                                                            {"permissions.sql", q.permissions + ";\n"},
                                                            {"prohibitions.sql", q.prohibitions + ";\n"},
                                                            {"obligations.sql", q.obligations + ";\n"}};
    for (const auto& [name, sql] : q.extraClauses) files.emplace_back(name + ".sql", sql + ";\n");
    std::filesystem::create_directories(in.outDir);
    std::string listing = "{\"format\": \"odrl-emit/1\", \"dialect\": \"" + q.dialect + "\", \"files\": [";
    for (std::size_t i = 0; i < files.size(); ++i) {
        const auto path = std::filesystem::path(in.outDir) / files[i].first;
        std::ofstream f(path, std::ios::binary);
        if (!(f << files[i].second)) throw ParseError("unwritable-file", "cannot write '" + path.string() + "'");
        err << "wrote " << path.string() << "\n";
        listing += (i ? ", \"" : "\"") + files[i].first + "\"";
    }
    out << listing << "]}\n";
    return kOk;
}

int check(const Inputs& in, std::ostream& out, std::ostream&) {
    const auto schema = io::parseSchema(io::readFile(in.schema));
    const auto policy = loadPolicy(in.policy, schema, false);
    std::vector<WellFormednessReport> reports;
    auto add = [&](const std::vector<EventRule>& rules, const char* kind) {
        for (std::size_t i = 0; i < rules.size(); ++i)
            reports.push_back(checkWellFormed(rules[i], schema,
                                              displayName(rules[i], std::string(kind) + "[" + std::to_string(i) + "]")));
    };
    add(policy.lite().permissions(), "permission");
    add(policy.lite().prohibitions(), "prohibition");
    add(policy.lite().obligations(), "obligation");
    for (const auto* r : policy.allRules())
        if (!policy.lite().hasPermission(*r) && !policy.lite().hasProhibition(*r) && !policy.lite().hasObligation(*r))
            reports.push_back(checkWellFormed(*r, schema));
    out << io::wellFormednessToJson(reports, schema);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });
    return ok ? kOk : kFound;
}

}// namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ODRL policy evaluation and comparison", "odrl"};
    app.require_subcommand(1);
    Inputs in;

    auto* ev = app.add_subcommand("evaluate", "Evaluate a policy on an event log");
    ev->add_option("--policy", in.policy, "Policy document")->required();
    ev->add_option("--world", in.world, "Event log (CSV)")->required();
    ev->add_option("--schema", in.schema, "Feature schema")->required();
    ev->add_option("--vocab", in.vocab, "Action vocabulary used to saturate permissions");
    ev->add_flag("--full", in.full, "Evaluate duties, remedies and consequences too");

    auto* cmp = app.add_subcommand("compare", "Check two policies for conflicts");
    cmp->add_option("--requester", in.requester, "Requester (or left) policy")->required();
    cmp->add_option("--provider", in.provider, "Provider (or right) policy")->required();
    cmp->add_option("--schema", in.schema, "Feature schema")->required();
    cmp->add_option("--mode", in.mode, "symmetric or asymmetric")
        ->check(CLI::IsMember({"symmetric", "asymmetric"}));
    cmp->add_option("--vocab", in.vocab, "Action vocabulary used to saturate permissions");
    cmp->add_flag("--normalize", in.normalize, "Normalize inconsistent inputs instead of rejecting them");

    auto* norm = app.add_subcommand("normalize", "Print an equivalent consistent policy");
    norm->add_option("--policy", in.policy, "Policy document")->required();
    norm->add_option("--schema", in.schema, "Feature schema")->required();

    auto* sat = app.add_subcommand("saturate", "Materialise permissions implied by an action vocabulary");
    sat->add_option("--policy", in.policy, "Policy document")->required();
    sat->add_option("--vocab", in.vocab, "Action vocabulary")->required();
    sat->add_option("--schema", in.schema, "Feature schema")->required();

    auto* emit = app.add_subcommand("emit-query", "Write SQL queries for the violation clauses");
    emit->add_option("--policy", in.policy, "Policy document")->required();
    emit->add_option("--schema", in.schema, "Feature schema")->required();
    emit->add_option("--out-dir", in.outDir, "Output directory")->required();
    emit->add_flag("--full", in.full, "Also emit duty, remedy and consequence clauses");

    auto* chk = app.add_subcommand("check", "Check rules for well-formedness");
    chk->add_option("--policy", in.policy, "Policy document")->required();
    chk->add_option("--schema", in.schema, "Feature schema")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        out << io::errorToJson("usage-error", e.what());
        err << "odrl: " << e.what() << "\n";
        return kError;
    }

    try {
        if (*ev) return evaluate(in, out, err);
        if (*cmp) return compare(in, out, err);
        if (*norm) return normalizeCommand(in, out, err);
        if (*sat) return saturateCommand(in, out, err);
        if (*emit) return emitQuery(in, out, err);
        if (*chk) return check(in, out, err);
    } catch (const Error& e) {
        out << io::errorToJson(e);
        err << "odrl: " << e.code() << ": " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        out << io::errorToJson("internal-error", e.what());
        err << "odrl: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

}// namespace odrl::cli
