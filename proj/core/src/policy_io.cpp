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
#include <odrl/io/policy_io.hpp>
#include <odrl/io/schema_io.hpp>
#include <odrl/matcher.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>

namespace odrl::io {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw ParseError("malformed-document", what); }

constexpr std::array<std::string_view, 6> kKindNames{"null", "timestamp", "numeric", "string", "identifier",
                                                     "identifier-set"};

ValueKind expectedKind(Datatype d) {
    switch (d) {
        case Datatype::Timestamp: return ValueKind::Timestamp;
        case Datatype::Numeric: return ValueKind::Number;
        case Datatype::String: return ValueKind::Text;
        case Datatype::Identifier: return ValueKind::Identifier;
        case Datatype::IdentifierSet: return ValueKind::IdentifierSet;
    }
    return ValueKind::Null;
}

/// Member kind of set operands for a feature.
ValueKind memberKind(Datatype d) {
    return d == Datatype::IdentifierSet ? ValueKind::Identifier : expectedKind(d);
}

// ---------------------------------------------------------------------------
// Values
// ---------------------------------------------------------------------------

json plainValue(const Value& v) {
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

json valueToJson(const Value& v, ValueKind expected) {
    if (kindOf(v) == expected) return plainValue(v);
    return json{{"type", kKindNames[static_cast<std::size_t>(kindOf(v))]}, {"value", plainValue(v)}};
}

Value valueOfKind(const json& j, ValueKind kind) {
    try {
        switch (kind) {
            case ValueKind::Null:
                if (!j.is_null()) break;
                return Null{};
            case ValueKind::Timestamp:
                if (j.is_number_integer()) return ts(j.get<std::int64_t>());
                if (j.is_string())
                    if (auto t = parseTimestamp(j.get<std::string>())) return ts(*t);
                break;
            case ValueKind::Number:
                if (j.is_number()) return num(j.get<double>());
                if (j.is_string())
                    if (auto v = parseValueText(j.get<std::string>(), Datatype::Numeric); v && !isNull(*v)) return *v;
                break;
            case ValueKind::Text:
                if (j.is_string()) return text(j.get<std::string>());
                break;
            case ValueKind::Identifier:
                if (j.is_string()) return id(j.get<std::string>());
                break;
            case ValueKind::IdentifierSet:
                if (j.is_array()) return idset(j.get<std::set<std::string>>());
                break;
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
    }
    throw ParseError("unparsable-value", "cannot read " + j.dump() + " as " +
                                             std::string(kKindNames[static_cast<std::size_t>(kind)]));
}

Value valueFromJson(const json& j, ValueKind expected) {
    if (j.is_object() && j.contains("type")) {
        const auto name = j["type"].get<std::string>();
        auto it = std::find(kKindNames.begin(), kKindNames.end(), name);
        if (it == kKindNames.end() || !j.contains("value")) malformed("bad typed value " + j.dump());
        return valueOfKind(j["value"], static_cast<ValueKind>(it - kKindNames.begin()));
    }
    return valueOfKind(j, expected);
}

// ---------------------------------------------------------------------------
// Native document
// ---------------------------------------------------------------------------

json conditionToJson(const Condition& c, const FeatureSchema& schema) {
    switch (c.kind()) {
        case Condition::Kind::Simple: {
            const auto& s = c.simple();
            const auto dt = schema.contains(s.feature()) ? schema.feature(s.feature()).datatype : Datatype::String;
            json j{{"feature", s.feature()}, {"op", std::string(toString(s.op()))}};
            if (s.hasSetOperand()) {
                json members = json::array();
                for (const auto& v : s.values()) members.push_back(valueToJson(v, memberKind(dt)));
                j["value"] = std::move(members);
            } else {
                const auto kind = s.op() == Operator::IsA ? ValueKind::Identifier : expectedKind(dt);
                j["value"] = valueToJson(s.value(), kind);
            }
            return j;
        }
        case Condition::Kind::Not: return json{{"not", conditionToJson(c.operands().front(), schema)}};
        case Condition::Kind::And:
        case Condition::Kind::Or:
        case Condition::Kind::Xor: {
            json ops = json::array();
            for (const auto& o : c.operands()) ops.push_back(conditionToJson(o, schema));
            const char* key = c.kind() == Condition::Kind::And ? "and" : c.kind() == Condition::Kind::Or ? "or" : "xor";
            return json{{key, std::move(ops)}};
        }
    }
    return nullptr;
}

FeatureId featureRef(const json& j, const FeatureSchema& schema) {
    if (j.is_number_unsigned()) {
        auto f = j.get<FeatureId>();
        if (!schema.contains(f)) throw ParseError("unknown-left-operand", "feature " + std::to_string(f) + " is not declared");
        return f;
    }
    if (j.is_string()) {
        if (auto f = schema.findByName(j.get<std::string>())) return *f;
        throw ParseError("unknown-left-operand", "feature '" + j.get<std::string>() + "' is not declared");
    }
    malformed("'feature' must be an index or a name");
}

Operator operatorRef(const json& j) {
    if (!j.is_string()) malformed("'op' must be a string");
    auto op = operatorFromString(j.get<std::string>());
    if (!op) throw ParseError("unsupported-operator", "operator '" + j.get<std::string>() + "' is not supported");
    return *op;
}

SimpleCondition makeSimple(FeatureId f, Operator op, const json& value, const FeatureSchema& schema) {
    const auto dt = schema.feature(f).datatype;
    if (isSetOperator(op)) {
        ValueSet members;
        if (value.is_array()) {
            for (const auto& m : value) members.insert(valueFromJson(m, memberKind(dt)));
        } else {
            members.insert(valueFromJson(value, memberKind(dt)));
        }
        return SimpleCondition(f, op, std::move(members));
    }
    const auto kind = op == Operator::IsA ? ValueKind::Identifier : expectedKind(dt);
    return SimpleCondition(f, op, valueFromJson(value, kind));
}

Condition conditionFromJson(const json& j, const FeatureSchema& schema) {
    if (!j.is_object() || j.size() == 0) malformed("condition must be an object");
    auto list = [&](const json& arr) {
        if (!arr.is_array()) malformed("logical operands must be an array");
        std::vector<Condition> out;
        for (const auto& c : arr) out.push_back(conditionFromJson(c, schema));
        return out;
    };
    if (j.contains("and") && j.size() == 1) return Condition::conjunction(list(j["and"]));
    if (j.contains("or") && j.size() == 1) return Condition::disjunction(list(j["or"]));
    if (j.contains("not") && j.size() == 1) return Condition::negation(conditionFromJson(j["not"], schema));
    if (j.contains("xor") && j.size() == 1) {
        auto ops = list(j["xor"]);
        if (ops.size() != 2) malformed("'xor' takes exactly two operands");
        return Condition::exclusiveOr(ops[0], ops[1]);
    }
    for (const auto& [key, _] : j.items())
        if (key != "feature" && key != "op" && key != "value") malformed("unknown key '" + key + "' in condition");
    if (!j.contains("feature") || !j.contains("op") || !j.contains("value")) malformed("condition needs feature, op and value");
    return makeSimple(featureRef(j["feature"], schema), operatorRef(j["op"]), j["value"], schema);
}

json ruleToJson(const EventRule& r, const FeatureSchema& schema) {
    json j = json::object();
    if (!r.label().empty()) j["label"] = r.label();
    json conditions = json::array();
    for (const auto& c : r.conditions()) conditions.push_back(conditionToJson(c, schema));
    j["conditions"] = std::move(conditions);
    if (r.hasResidual()) {
        json residual = json::array();
        for (const auto& c : r.residual()) residual.push_back(conditionToJson(c, schema));
        j["residual"] = std::move(residual);
    }
    return j;
}

EventRule ruleFromJson(const json& j, const FeatureSchema& schema) {
    if (!j.is_object()) malformed("rule must be an object");
    for (const auto& [key, _] : j.items())
        if (key != "label" && key != "conditions" && key != "residual") malformed("unknown key '" + key + "' in rule");
    auto read = [&](const char* key) {
        std::vector<Condition> out;
        if (!j.contains(key)) return out;
        if (!j[key].is_array()) malformed(std::string("'") + key + "' must be an array");
        for (const auto& c : j[key]) out.push_back(conditionFromJson(c, schema));
        return out;
    };
    std::string label = j.contains("label") ? j["label"].get<std::string>() : std::string{};
    return EventRule(read("conditions"), std::move(label), read("residual"));
}

struct NativeReader {
    const FeatureSchema& schema;
    std::vector<EventRule> known;

    std::vector<EventRule> rules(const json& doc, const char* key) {
        std::vector<EventRule> out;
        if (!doc.contains(key)) return out;
        if (!doc[key].is_array()) malformed(std::string("'") + key + "' must be an array");
        for (const auto& r : doc[key]) out.push_back(ruleFromJson(r, schema));
        known.insert(known.end(), out.begin(), out.end());
        return out;
    }

    EventRule member(const json& tuple, const char* key) {
        if (!tuple.is_object() || !tuple.contains(key)) malformed(std::string("tuple is missing '") + key + "'");
        const auto& j = tuple[key];
        if (j.is_string()) {
            const auto label = j.get<std::string>();
            for (const auto& r : known)
                if (r.label() == label) return r;
            throw ParseError("dangling-duty", "no rule labelled '" + label + "'");
        }
        auto r = ruleFromJson(j, schema);
        known.push_back(r);
        return r;
    }

    template<typename T, typename Make>
    std::vector<T> tuples(const json& doc, const char* key, std::initializer_list<const char*> fields, Make make) {
        std::vector<T> out;
        if (!doc.contains(key)) return out;
        if (!doc[key].is_array()) malformed(std::string("'") + key + "' must be an array");
        for (const auto& t : doc[key]) {
            for (const auto& [k, _] : t.items())
                if (std::none_of(fields.begin(), fields.end(), [&](const char* f) { return k == f; }))
                    malformed("unknown key '" + k + "' in " + key);
            out.push_back(make(t));
        }
        return out;
    }
};

FullPolicy parseNative(const json& doc, const FeatureSchema& schema) {
    for (const auto& [key, _] : doc.items())
        if (key != "format" && key != "permissions" && key != "prohibitions" && key != "obligations" &&
            key != "duties" && key != "dutiesWithConsequence" && key != "remedies" && key != "obligationConsequences")
            malformed("unknown key '" + key + "' in policy");
    NativeReader r{schema, {}};
    auto p = r.rules(doc, "permissions");
    auto f = r.rules(doc, "prohibitions");
    auto o = r.rules(doc, "obligations");
    auto dp = r.tuples<DutyPair>(doc, "duties", {"permission", "duty"}, [&](const json& t) {
        return DutyPair{r.member(t, "permission"), r.member(t, "duty")};
    });
    auto dpc = r.tuples<DutyConsequence>(doc, "dutiesWithConsequence", {"permission", "duty", "consequence"},
                                         [&](const json& t) {
                                             return DutyConsequence{r.member(t, "permission"), r.member(t, "duty"),
                                                                    r.member(t, "consequence")};
                                         });
    auto fr = r.tuples<RemedyPair>(doc, "remedies", {"prohibition", "remedy"}, [&](const json& t) {
        return RemedyPair{r.member(t, "prohibition"), r.member(t, "remedy")};
    });
    auto oc = r.tuples<ObligationConsequence>(doc, "obligationConsequences", {"obligation", "consequence"},
                                              [&](const json& t) {
                                                  return ObligationConsequence{r.member(t, "obligation"),
                                                                               r.member(t, "consequence")};
                                              });
    return FullPolicy(LitePolicy(std::move(p), std::move(f), std::move(o)), std::move(dp), std::move(dpc),
                      std::move(fr), std::move(oc));
}

// ---------------------------------------------------------------------------
// ODRL JSON-LD profile
// ---------------------------------------------------------------------------

std::string stripPrefix(std::string s) {
    for (std::string_view p : {"odrl:", "http://www.w3.org/ns/odrl/2/"})
        if (s.starts_with(p)) return s.substr(p.size());
    return s;
}

[[noreturn]] void outsideProfile(const std::string& what) { throw ParseError("outside-profile", what); }

const json& single(const json& j, const std::string& where) {
    if (j.is_array()) {
        if (j.size() != 1) outsideProfile(where + " must hold exactly one element");
        return j[0];
    }
    return j;
}

std::string atom(const json& j, const std::string& where) {
    const auto& v = single(j, where);
    if (v.is_string()) return stripPrefix(v.get<std::string>());
    if (v.is_object()) {
        for (const char* key : {"@id", "uid", "source", "rdf:value", "@value"})
            if (v.contains(key)) return atom(v[key], where);
    }
    outsideProfile(where + " must be an identifier");
}

class OdrlReader {
  public:
    OdrlReader(const json& doc, const FeatureSchema& schema) : doc_(doc), schema_(schema) {
        for (const auto& [key, _] : doc.items())
            if (!isPolicyKey(key)) outsideProfile("unsupported policy key '" + key + "'");
    }

    FullPolicy read() {
        std::vector<EventRule> permissions, prohibitions, obligations;
        std::vector<std::pair<EventRule, std::vector<json>>> permissionDuties;
        std::vector<RemedyPair> remedies;
        std::vector<ObligationConsequence> consequences;

        for (const auto& r : list(doc_, "permission")) {
            auto rule = ruleOf(r, "permission");
            permissions.push_back(rule);
            if (r.contains("duty")) permissionDuties.emplace_back(rule, asArray(r["duty"]));
        }
        for (const auto& r : list(doc_, "prohibition")) {
            auto rule = ruleOf(r, "prohibition");
            if (r.contains("remedy")) {
                for (const auto& m : asArray(r["remedy"])) remedies.push_back({rule, ruleOf(m, "remedy")});
            } else {
                prohibitions.push_back(std::move(rule));
            }
        }
        for (const auto& r : list(doc_, "obligation")) {
            auto rule = ruleOf(r, "obligation");
            if (r.contains("consequence")) {
                for (const auto& c : asArray(r["consequence"])) consequences.push_back({rule, ruleOf(c, "consequence")});
            } else {
                obligations.push_back(std::move(rule));
            }
        }

        LitePolicy lite(permissions, prohibitions, obligations);
        auto requireInP = [&](const EventRule& r, const char* what) {
            if (!lite.hasPermission(r))
                throw ParseError("dangling-duty", std::string(what) + " '" + displayName(r, "unnamed") +
                                                      "' is not also stated as a permission");
        };
        std::vector<DutyPair> dp;
        std::vector<DutyConsequence> dpc;
        for (const auto& [permission, duties] : permissionDuties)
            for (const auto& d : duties) {
                auto duty = ruleOf(d, "duty");
                requireInP(duty, "duty");
                if (d.contains("consequence")) {
                    for (const auto& c : asArray(d["consequence"])) {
                        auto consequence = ruleOf(c, "consequence");
                        requireInP(consequence, "consequence");
                        dpc.push_back({permission, duty, consequence});
                    }
                } else {
                    dp.push_back({permission, duty});
                }
            }
        for (const auto& t : remedies) requireInP(t.remedy, "remedy");
        for (const auto& t : consequences) requireInP(t.consequence, "consequence");
        return FullPolicy(std::move(lite), std::move(dp), std::move(dpc), std::move(remedies), std::move(consequences));
    }

  private:
    static bool isPolicyKey(const std::string& k) {
        for (std::string_view a : {"@context", "@type", "@id", "uid", "profile", "assigner", "assignee", "target",
                                   "action", "permission", "prohibition", "obligation"})
            if (k == a) return true;
        return false;
    }

    static std::vector<json> asArray(const json& j) {
        if (j.is_array()) return j.get<std::vector<json>>();
        return {j};
    }

    static std::vector<json> list(const json& doc, const char* key) {
        if (!doc.contains(key)) return {};
        return asArray(doc[key]);
    }

    FeatureId roleFeature(Role role, const char* what) const {
        auto f = schema_.findByRole(role);
        if (!f) throw ParseError("unknown-left-operand", std::string("no schema feature has role ") + what);
        return *f;
    }

    /// Feature for an ODRL leftOperand, preferring the given component scope.
    FeatureId leftOperand(const std::string& raw, std::optional<FeatureId> scope) const {
        const auto name = stripPrefix(raw);
        std::vector<FeatureId> hits;
        for (const auto& f : schema_.features())
            if (f.leftOperand.value_or(f.name) == name || f.name == name) hits.push_back(f.id);
        if (hits.empty()) throw ParseError("unknown-left-operand", "leftOperand '" + name + "' matches no feature");
        for (FeatureId h : hits) {
            const auto g = schema_.component(h);
            if (scope ? (!g.isRuleWide() && g.target() == *scope && h != *scope) : g.isRuleWide()) return h;
        }
        return hits.front();
    }

    Condition constraint(const json& c, std::optional<FeatureId> scope) const {
        if (!c.is_object()) outsideProfile("constraint must be an object");
        if (c.contains("andSequence") || c.contains("odrl:andSequence"))
            throw ParseError("unsupported-operator", "andSequence has no clear semantic interpretation and is not supported");
        auto operands = [&](const json& j) {
            const auto& items = j.is_object() && j.contains("@list") ? j["@list"] : j;
            std::vector<Condition> out;
            for (const auto& x : asArray(items)) out.push_back(constraint(x, scope));
            return out;
        };
        for (const char* key : {"and", "or", "xone", "odrl:and", "odrl:or", "odrl:xone"}) {
            if (!c.contains(key)) continue;
            auto ops = operands(c[key]);
            const auto kind = stripPrefix(key);
            if (kind == "and") return Condition::conjunction(std::move(ops));
            if (kind == "or") return Condition::disjunction(std::move(ops));
            if (ops.size() == 2) return Condition::exclusiveOr(ops[0], ops[1]);
            std::vector<Condition> exactlyOne;
            for (std::size_t i = 0; i < ops.size(); ++i) {
                std::vector<Condition> term{ops[i]};
                for (std::size_t j = 0; j < ops.size(); ++j)
                    if (j != i) term.push_back(Condition::negation(ops[j]));
                exactlyOne.push_back(Condition::conjunction(std::move(term)));
            }
            return Condition::disjunction(std::move(exactlyOne));
        }
        for (const auto& [key, _] : c.items())
            if (key != "leftOperand" && key != "operator" && key != "rightOperand" && key != "@type" && key != "uid" &&
                key != "dataType" && key != "unit")
                outsideProfile("unsupported constraint key '" + key + "'");
        if (!c.contains("leftOperand") || !c.contains("operator") || !c.contains("rightOperand"))
            outsideProfile("constraint needs leftOperand, operator and rightOperand");
        const auto f = leftOperand(atom(c["leftOperand"], "leftOperand"), scope);
        const auto opName = atom(c["operator"], "operator");
        auto op = operatorFromString(opName);
        if (!op) throw ParseError("unsupported-operator", "operator '" + opName + "' is not supported");
        return makeSimple(f, *op, rightOperand(c["rightOperand"]), schema_);
    }

    static json rightOperand(const json& j) {
        if (j.is_array()) {
            json out = json::array();
            for (const auto& x : j) out.push_back(rightOperand(x));
            return out;
        }
        if (j.is_object()) {
            if (j.contains("@value")) return j["@value"];
            if (j.contains("@id")) return json(stripPrefix(j["@id"].get<std::string>()));
            if (j.contains("@list")) return rightOperand(j["@list"]);
            outsideProfile("unsupported rightOperand " + j.dump());
        }
        if (j.is_string()) return json(stripPrefix(j.get<std::string>()));
        return j;
    }

    void component(const json& j, FeatureId k, const std::string& where, std::vector<Condition>& out) const {
        const auto& v = single(j, where);
        out.emplace_back(SimpleCondition(k, Operator::Eq, valueFromJson(json(atom(v, where)), ValueKind::Identifier)));
        if (v.is_object()) {
            for (const char* key : {"refinement", "odrl:refinement"})
                if (v.contains(key))
                    for (const auto& r : asArray(v[key])) out.push_back(constraint(r, k));
        }
    }

    EventRule ruleOf(const json& r, const char* kind) const {
        if (!r.is_object()) outsideProfile(std::string(kind) + " must be an object");
        for (const auto& [key, _] : r.items())
            if (key != "@type" && key != "uid" && key != "@id" && key != "target" && key != "assignee" &&
                key != "assigner" && key != "action" && key != "constraint" && key != "duty" && key != "remedy" &&
                key != "consequence")
                outsideProfile("unsupported key '" + key + "' in " + kind);
        std::vector<Condition> conditions;
        auto pick = [&](const char* key) -> const json* {
            if (r.contains(key)) return &r[key];
            if (doc_.contains(key)) return &doc_[key];
            return nullptr;
        };
        const json* action = pick("action");
        if (!action) throw PolicyError("ill-formed-rule", std::string(kind) + " has no action");
        component(*action, kActionFeature, "action", conditions);
        if (const auto* t = pick("target")) component(*t, roleFeature(Role::Target, "target"), "target", conditions);
        if (const auto* a = pick("assignee")) component(*a, roleFeature(Role::Assignee, "assignee"), "assignee", conditions);
        if (const auto* a = pick("assigner")) component(*a, roleFeature(Role::Assigner, "assigner"), "assigner", conditions);
        if (r.contains("constraint"))
            for (const auto& c : asArray(r["constraint"])) conditions.push_back(constraint(c, std::nullopt));
        std::string label;
        if (r.contains("uid")) label = atom(r["uid"], "uid");
        else if (r.contains("@id")) label = atom(r["@id"], "@id");
        return EventRule(std::move(conditions), std::move(label));
    }

    const json& doc_;
    const FeatureSchema& schema_;
};

void enforce(const FullPolicy& p, const FeatureSchema& schema) {
    const auto& lite = p.lite();
    auto check = [&](const std::vector<EventRule>& rules, const char* kind) {
        for (std::size_t i = 0; i < rules.size(); ++i)
            requireWellFormed(rules[i], schema, displayName(rules[i], std::string(kind) + "[" + std::to_string(i) + "]"));
    };
    check(lite.permissions(), "permission");
    check(lite.prohibitions(), "prohibition");
    check(lite.obligations(), "obligation");
    for (const auto* r : p.allRules()) requireWellFormed(*r, schema);
}

json tupleRule(const EventRule& r, const FeatureSchema& schema) { return ruleToJson(r, schema); }

}// namespace

FullPolicy parsePolicy(std::string_view document, const FeatureSchema& schema, PolicyParseOptions options) {
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        malformed(std::string("policy: ") + e.what());
    }
    if (!doc.is_object()) malformed("policy must be a JSON object");
    FullPolicy policy;
    try {
        if (doc.contains("@context")) {
            policy = OdrlReader(doc, schema).read();
        } else if (doc.contains("format")) {
            if (doc["format"] != kNativePolicyFormat)
                throw ParseError("unsupported-format", "policy must declare \"format\": \"" +
                                                           std::string(kNativePolicyFormat) + "\"");
            policy = parseNative(doc, schema);
        } else if (doc.empty()) {
            return FullPolicy{};
        } else {
            malformed("policy needs either \"@context\" (ODRL) or \"format\" (native)");
        }
    } catch (const json::exception& e) {
        malformed(std::string("policy: ") + e.what());
    }
    if (options.enforceWellFormed) enforce(policy, schema);
    return policy;
}

std::string serializePolicy(const FullPolicy& policy, const FeatureSchema& schema) {
    json doc{{"format", kNativePolicyFormat}};
    auto rules = [&](const std::vector<EventRule>& rs) {
        json arr = json::array();
        for (const auto& r : rs) arr.push_back(ruleToJson(r, schema));
        return arr;
    };
    doc["permissions"] = rules(policy.lite().permissions());
    doc["prohibitions"] = rules(policy.lite().prohibitions());
    doc["obligations"] = rules(policy.lite().obligations());
    if (!policy.duties().empty()) {
        json arr = json::array();
        for (const auto& t : policy.duties())
            arr.push_back({{"permission", tupleRule(t.permission, schema)}, {"duty", tupleRule(t.duty, schema)}});
        doc["duties"] = std::move(arr);
    }
    if (!policy.dutiesWithConsequence().empty()) {
        json arr = json::array();
        for (const auto& t : policy.dutiesWithConsequence())
            arr.push_back({{"permission", tupleRule(t.permission, schema)},
                           {"duty", tupleRule(t.duty, schema)},
                           {"consequence", tupleRule(t.consequence, schema)}});
        doc["dutiesWithConsequence"] = std::move(arr);
    }
    if (!policy.remedies().empty()) {
        json arr = json::array();
        for (const auto& t : policy.remedies())
            arr.push_back({{"prohibition", tupleRule(t.prohibition, schema)}, {"remedy", tupleRule(t.remedy, schema)}});
        doc["remedies"] = std::move(arr);
    }
    if (!policy.obligationConsequences().empty()) {
        json arr = json::array();
        for (const auto& t : policy.obligationConsequences())
            arr.push_back({{"obligation", tupleRule(t.obligation, schema)},
                           {"consequence", tupleRule(t.consequence, schema)}});
        doc["obligationConsequences"] = std::move(arr);
    }
    return doc.dump(2) + "\n";
}

std::string serializePolicy(const LitePolicy& policy, const FeatureSchema& schema) {
    return serializePolicy(FullPolicy(policy), schema);
}

}// namespace odrl::io
