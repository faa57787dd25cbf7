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

#include <odrl/io/report_io.hpp>

#include <json.hpp>

namespace odrl::io {

using nlohmann::ordered_json;

namespace {

ordered_json valueJson(const Value& v) {
    switch (kindOf(v)) {
        case ValueKind::Null: return nullptr;
        case ValueKind::Timestamp: return std::get<Timestamp>(v).ticks;
        case ValueKind::Number: return std::get<Number>(v).value;
        case ValueKind::Text: return std::get<Text>(v).value;
        case ValueKind::Identifier: return std::get<Identifier>(v).value;
        case ValueKind::IdentifierSet: return std::get<IdentifierSet>(v).members;
    }
    return nullptr;
}

ordered_json eventJson(const Event& e, const FeatureSchema& schema) {
    ordered_json j = ordered_json::object();
    for (std::size_t i = 0; i < e.size(); ++i) {
        const auto name = schema.contains(i) ? schema.feature(i).name : std::to_string(i);
        j[name] = valueJson(e[i]);
    }
    return j;
}

template<typename Events>
ordered_json eventsJson(const Events& events, const FeatureSchema& schema) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : events) arr.push_back(eventJson(e, schema));
    return arr;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}// namespace

std::string eventToJson(const Event& e, const FeatureSchema& schema) { return eventJson(e, schema).dump(); }

std::string reportToJson(const ViolationReport& report, const FeatureSchema& schema) {
    ordered_json j;
    j["format"] = kReportFormat;
    j["valid"] = report.valid();
    ordered_json findings = ordered_json::array();
    for (const auto& f : report.findings) {
        ordered_json item;
        item["clause"] = toString(f.clause);
        item["rules"] = f.rules;
        item["witnesses"] = eventsJson(f.witnesses, schema);
        if (!f.missing.empty()) item["missing"] = f.missing;
        findings.push_back(std::move(item));
    }
    j["findings"] = std::move(findings);
    ordered_json fulfilled = ordered_json::array();
    for (const auto& f : report.fulfilled) {
        ordered_json item;
        item["rule"] = f.rule;
        item["witnesses"] = eventsJson(f.witnesses, schema);
        fulfilled.push_back(std::move(item));
    }
    j["fulfilled"] = std::move(fulfilled);
    return dump(j);
}

std::string verdictToJson(const ConflictVerdict& verdict, const FeatureSchema& schema) {
    ordered_json j;
    j["format"] = kVerdictFormat;
    j["kind"] = toString(verdict.kind);
    j["conflict"] = verdict.conflict();
    ordered_json failures = ordered_json::array();
    for (const auto& f : verdict.failures) {
        ordered_json item;
        item["direction"] = toString(f.direction);
        item["cause"] = toString(f.cause);
        item["rules"] = f.rules;
        item["witness"] = eventsJson(f.witness, schema);
        failures.push_back(std::move(item));
    }
    j["failures"] = std::move(failures);
    return dump(j);
}

std::string wellFormednessToJson(const std::vector<WellFormednessReport>& reports, const FeatureSchema& schema) {
    ordered_json j;
    j["format"] = kCheckFormat;
    ordered_json violations = ordered_json::array();
    for (const auto& r : reports)
        for (const auto& v : r.violations) {
            ordered_json item;
            item["rule"] = v.rule;
            item["item"] = v.item;
            ordered_json features = ordered_json::array();
            for (auto f : v.features) features.push_back(schema.contains(f) ? schema.feature(f).name : std::to_string(f));
            item["features"] = std::move(features);
            item["detail"] = v.detail;
            violations.push_back(std::move(item));
        }
    j["ok"] = violations.empty();
    j["violations"] = std::move(violations);
    return dump(j);
}

std::string errorToJson(std::string_view code, std::string_view message) {
    ordered_json j;
    j["format"] = kErrorFormat;
    j["error"] = {{"code", code}, {"message", message}};
    return dump(j);
}

std::string errorToJson(const Error& error) {
    ordered_json j;
    j["format"] = kErrorFormat;
    ordered_json e;
    e["code"] = error.code();
    e["message"] = error.what();
    if (const auto* p = dynamic_cast<const ParseError*>(&error)) {
        if (p->row()) e["row"] = *p->row();
        if (p->column()) e["column"] = *p->column();
    }
    j["error"] = std::move(e);
    return dump(j);
}

}// namespace odrl::io
