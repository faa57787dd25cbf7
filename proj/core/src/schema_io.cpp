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

#include <odrl/error.hpp>
#include <odrl/io/schema_io.hpp>

#include <json.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <cmath>
#include <cctype>

namespace odrl::io {

using nlohmann::json;

namespace {

json parseJson(std::string_view text, std::string_view what) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("malformed-document", std::string(what) + ": " + e.what());
    }
}

void requireFormat(const json& doc, std::string_view expected, std::string_view what) {
    if (!doc.is_object()) throw ParseError("malformed-document", std::string(what) + " must be a JSON object");
    if (!doc.contains("format") || doc["format"] != expected)
        throw ParseError("unsupported-format", std::string(what) + " must declare \"format\": \"" +
                                                   std::string(expected) + "\"");
}

void rejectUnknownKeys(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
    for (const auto& [key, _] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParseError("unknown-field", "unknown key '" + key + "' in " + std::string(where));
}

template<typename T>
T field(const json& obj, const char* key, std::string_view where) {
    if (!obj.contains(key)) throw ParseError("malformed-document", std::string("missing '") + key + "' in " + std::string(where));
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError("malformed-document", std::string("bad type for '") + key + "' in " + std::string(where));
    }
}

template<typename Int>
std::optional<Int> parseInt(std::string_view s) {
    Int v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
    return v;
}

}// namespace

FeatureSchema parseSchema(std::string_view text) {
    const auto doc = parseJson(text, "schema");
    requireFormat(doc, kSchemaFormat, "schema");
    rejectUnknownKeys(doc, {"format", "features"}, "schema");
    const auto& features = doc.contains("features") ? doc["features"] : json::array();
    if (!features.is_array()) throw ParseError("malformed-document", "'features' must be an array");

    std::map<std::string, FeatureId> byName;
    for (const auto& f : features) {
        if (!f.is_object()) throw ParseError("malformed-document", "feature entries must be objects");
        byName.emplace(field<std::string>(f, "name", "feature"), field<FeatureId>(f, "id", "feature"));
    }
    auto resolve = [&](const std::string& name, const std::string& where) {
        auto it = byName.find(name);
        if (it == byName.end()) throw SchemaError("bad-gamma-target", where + " names unknown feature '" + name + "'");
        return it->second;
    };

    std::vector<FeatureDecl> decls;
    for (const auto& f : features) {
        rejectUnknownKeys(f, {"id", "name", "datatype", "component", "role", "leftOperand", "classes", "classFeature"},
                          "feature");
        FeatureDecl d;
        d.id = field<FeatureId>(f, "id", "feature");
        d.name = field<std::string>(f, "name", "feature");
        const auto where = "feature '" + d.name + "'";
        auto dt = datatypeFromString(field<std::string>(f, "datatype", where));
        if (!dt) throw ParseError("malformed-document", "unknown datatype in " + where);
        d.datatype = *dt;
        const auto component = field<std::string>(f, "component", where);
        if (component == "rule") d.component = ComponentRef::ruleWide();
        else if (component == "self") d.component = ComponentRef::feature(d.id);
        else d.component = ComponentRef::feature(resolve(component, where));
        if (f.contains("role")) {
            auto r = roleFromString(field<std::string>(f, "role", where));
            if (!r) throw ParseError("malformed-document", "unknown role in " + where);
            d.role = *r;
        }
        if (f.contains("leftOperand")) d.leftOperand = field<std::string>(f, "leftOperand", where);
        if (f.contains("classes")) {
            for (const auto& c : field<std::vector<std::string>>(f, "classes", where)) d.classes.insert(c);
        }
        if (f.contains("classFeature")) d.classFeature = resolve(field<std::string>(f, "classFeature", where), where);
        decls.push_back(std::move(d));
    }
    return FeatureSchema(std::move(decls));
}

std::string serializeSchema(const FeatureSchema& schema) {
    json features = json::array();
    for (const auto& f : schema.features()) {
        json j{{"id", f.id}, {"name", f.name}, {"datatype", std::string(toString(f.datatype))}};
        if (f.component.isRuleWide()) j["component"] = "rule";
        else if (f.component.target() == f.id) j["component"] = "self";
        else j["component"] = schema.feature(f.component.target()).name;
        if (f.role != Role::None) j["role"] = std::string(toString(f.role));
        if (f.leftOperand) j["leftOperand"] = *f.leftOperand;
        if (!f.classes.empty()) j["classes"] = f.classes;
        if (f.classFeature) j["classFeature"] = schema.feature(*f.classFeature).name;
        features.push_back(std::move(j));
    }
    return json{{"format", kSchemaFormat}, {"features", features}}.dump(2) + "\n";
}

ActionVocabulary parseVocabulary(std::string_view text) {
    const auto doc = parseJson(text, "vocabulary");
    requireFormat(doc, kVocabularyFormat, "vocabulary");
    rejectUnknownKeys(doc, {"format", "includedIn"}, "vocabulary");
    std::vector<std::pair<std::string, std::string>> edges;
    if (doc.contains("includedIn")) {
        const auto& list = doc["includedIn"];
        if (!list.is_array()) throw ParseError("malformed-document", "'includedIn' must be an array");
        for (const auto& e : list) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("malformed-document", "'includedIn' entries must be [child, parent] pairs");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    return ActionVocabulary(std::move(edges));
}

std::string serializeVocabulary(const ActionVocabulary& vocabulary) {
    json edges = json::array();
    for (const auto& [child, parent] : vocabulary.edges()) edges.push_back({child, parent});
    return json{{"format", kVocabularyFormat}, {"includedIn", edges}}.dump(2) + "\n";
}

std::optional<std::int64_t> parseTimestamp(std::string_view s) {
    if (auto ticks = parseInt<std::int64_t>(s)) return ticks;
    // YYYY-MM-DD[THH:MM[:SS[.fff]]][Z|(+|-)HH:MM]
    if (s.size() < 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    auto year = parseInt<int>(s.substr(0, 4));
    auto month = parseInt<unsigned>(s.substr(5, 2));
    auto day = parseInt<unsigned>(s.substr(8, 2));
    if (!year || !month || !day) return std::nullopt;
    const std::chrono::year_month_day date{std::chrono::year{*year}, std::chrono::month{*month},
                                           std::chrono::day{*day}};
    if (!date.ok()) return std::nullopt;
    std::int64_t seconds = std::chrono::sys_days(date).time_since_epoch().count() * std::int64_t{86400};
    auto rest = s.substr(10);
    if (rest.empty()) return seconds;
    if (rest.front() != 'T' && rest.front() != ' ') return std::nullopt;
    rest.remove_prefix(1);
    if (rest.size() < 5 || rest[2] != ':') return std::nullopt;
    auto hh = parseInt<int>(rest.substr(0, 2));
    auto mm = parseInt<int>(rest.substr(3, 2));
    if (!hh || !mm || *hh > 23 || *mm > 59) return std::nullopt;
    seconds += *hh * 3600 + *mm * 60;
    rest.remove_prefix(5);
    if (rest.size() >= 3 && rest[0] == ':') {
        auto ss = parseInt<int>(rest.substr(1, 2));
        if (!ss || *ss > 60) return std::nullopt;
        seconds += *ss;
        rest.remove_prefix(3);
        if (!rest.empty() && rest[0] == '.') {
            rest.remove_prefix(1);
            while (!rest.empty() && std::isdigit(static_cast<unsigned char>(rest[0]))) rest.remove_prefix(1);
        }
    }
    if (rest.empty() || rest == "Z") return seconds;
    if (rest.size() != 6 || (rest[0] != '+' && rest[0] != '-') || rest[3] != ':') return std::nullopt;
    auto oh = parseInt<int>(rest.substr(1, 2));
    auto om = parseInt<int>(rest.substr(4, 2));
    if (!oh || !om) return std::nullopt;
    const int offset = *oh * 3600 + *om * 60;
    return rest[0] == '+' ? seconds - offset : seconds + offset;
}

std::optional<Value> parseValueText(std::string_view raw, Datatype d) {
    if (raw == "null") return Value{Null{}};
    switch (d) {
        case Datatype::Timestamp:
            if (auto t = parseTimestamp(raw)) return ts(*t);
            return std::nullopt;
        case Datatype::Numeric: {
            double v{};
            auto [p, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
            if (ec != std::errc{} || p != raw.data() + raw.size() || !std::isfinite(v)) return std::nullopt;
            return num(v);
        }
        case Datatype::String: return odrl::text(std::string(raw));
        case Datatype::Identifier:
            if (raw.empty()) return std::nullopt;
            return id(std::string(raw));
        case Datatype::IdentifierSet: {
            std::set<std::string> members;
            std::size_t start = 0;
            while (!raw.empty() && start <= raw.size()) {
                auto end = raw.find('|', start);
                if (end == std::string_view::npos) end = raw.size();
                auto m = raw.substr(start, end - start);
                if (m.empty()) return std::nullopt;
                members.emplace(m);
                start = end + 1;
            }
            return idset(std::move(members));
        }
    }
    return std::nullopt;
}

std::string formatValueText(const Value& v) {
    switch (kindOf(v)) {
        case ValueKind::Null: return "null";
        case ValueKind::Timestamp: return std::to_string(std::get<Timestamp>(v).ticks);
        case ValueKind::Number: return formatNumber(std::get<Number>(v).value);
        case ValueKind::Text: return std::get<Text>(v).value;
        case ValueKind::Identifier: return std::get<Identifier>(v).value;
        case ValueKind::IdentifierSet: {
            std::string out;
            for (const auto& m : std::get<IdentifierSet>(v).members) {
                if (!out.empty()) out += '|';
                out += m;
            }
            return out;
        }
    }
    return "null";
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("unreadable-file", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}// namespace odrl::io
