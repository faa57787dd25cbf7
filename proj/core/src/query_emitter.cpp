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
#include <odrl/matcher.hpp>
#include <odrl/query_emitter.hpp>

#include <algorithm>
#include <cctype>
#include <map>

namespace odrl {

namespace {

const char* const kFalse = "(1 = 0)";
const char* const kTrue = "(1 = 1)";

std::string quoteIdent(std::string_view name) {
    std::string out = "\"";
    for (char c : name) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string quoteText(std::string_view s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += '\'';
        out += c;
    }
    return out + "'";
}

std::string literal(const Value& v) {
    switch (kindOf(v)) {
        case ValueKind::Null: return "NULL";
        case ValueKind::Timestamp: return std::to_string(std::get<Timestamp>(v).ticks);
        case ValueKind::Number: return formatNumber(std::get<Number>(v).value);
        case ValueKind::Text: return quoteText(std::get<Text>(v).value);
        case ValueKind::Identifier: return quoteText(std::get<Identifier>(v).value);
        case ValueKind::IdentifierSet: return "1";
    }
    return "NULL";
}

ValueKind kindFor(Datatype d) {
    switch (d) {
        case Datatype::Timestamp: return ValueKind::Timestamp;
        case Datatype::Numeric: return ValueKind::Number;
        case Datatype::String: return ValueKind::Text;
        case Datatype::Identifier: return ValueKind::Identifier;
        case Datatype::IdentifierSet: return ValueKind::IdentifierSet;
    }
    return ValueKind::Null;
}

const char* sqlType(Datatype d) {
    switch (d) {
        case Datatype::Timestamp: return "BIGINT";
        case Datatype::Numeric: return "DOUBLE PRECISION";
        case Datatype::String:
        case Datatype::Identifier: return "VARCHAR(1024)";
        case Datatype::IdentifierSet: return "INTEGER";
    }
    return "VARCHAR(1024)";
}

std::string join(const std::vector<std::string>& parts, std::string_view sep, const char* empty) {
    if (parts.empty()) return empty;
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out + ")";
}

std::vector<std::string> columnNames(const FeatureSchema& schema) {
    std::vector<std::string> cols;
    std::map<std::string, std::string> seen{{"event_id", "the event key"}};
    for (const auto& f : schema.features()) {
        auto c = sanitizeColumnName(f.name);
        if (auto [it, fresh] = seen.emplace(c, f.name); !fresh)
            throw EmitError("column-collision", "features '" + it->second + "' and '" + f.name +
                                                    "' both map to column '" + c + "'");
        cols.push_back(std::move(c));
    }
    return cols;
}

class PredicateWriter {
  public:
    PredicateWriter(const FeatureSchema& schema, std::string_view alias)
        : schema_(schema), alias_(alias), columns_(columnNames(schema)) {}

    std::string rule(const EventRule& r) const {
        std::vector<std::string> parts;
        for (const auto* list : {&r.conditions(), &r.residual()})
            for (const auto& c : *list) parts.push_back(condition(c));
        return join(parts, " AND ", kTrue);
    }

    std::string condition(const Condition& c) const {
        switch (c.kind()) {
            case Condition::Kind::Simple: return leaf(c.simple());
            case Condition::Kind::Not: return "(NOT " + condition(c.operands().front()) + ")";
            case Condition::Kind::Xor: {
                auto a = condition(c.operands()[0]);
                auto b = condition(c.operands()[1]);
                return "((" + a + " AND NOT " + b + ") OR (NOT " + a + " AND " + b + "))";
            }
            case Condition::Kind::And:
            case Condition::Kind::Or: {
                std::vector<std::string> parts;
                for (const auto& o : c.operands()) parts.push_back(condition(o));
                return c.kind() == Condition::Kind::And ? join(parts, " AND ", kTrue) : join(parts, " OR ", kFalse);
            }
        }
        return kFalse;
    }

    std::string column(FeatureId f) const { return alias_ + "." + quoteIdent(columns_[f]); }

  private:
    std::string setRows(FeatureId f, const std::string& extra) const {
        const auto s = alias_ + "_set";
        return "(SELECT 1 FROM world_sets AS " + s + " WHERE " + s + ".event_id = " + alias_ + ".event_id AND " + s +
            ".feature = " + quoteText(columns_[f]) + extra + ")";
    }

    std::string memberIs(FeatureId f, const std::string& m) const {
        return "EXISTS " + setRows(f, " AND " + alias_ + "_set.member = " + quoteText(m));
    }

    std::string memberList(const std::set<std::string>& members) const {
        std::string out = "(";
        bool first = true;
        for (const auto& m : members) {
            if (!first) out += ", ";
            out += quoteText(m);
            first = false;
        }
        return out + ")";
    }

    /// L ⊆ S for the set stored under feature f.
    std::string setWithin(FeatureId f, const std::set<std::string>& s) const {
        if (s.empty()) return "NOT EXISTS " + setRows(f, "");
        return "NOT EXISTS " + setRows(f, " AND " + alias_ + "_set.member NOT IN " + memberList(s));
    }

    /// S ⊆ L.
    std::string setCovers(FeatureId f, const std::set<std::string>& s) const {
        std::vector<std::string> parts;
        for (const auto& m : s) parts.push_back(memberIs(f, m));
        return join(parts, " AND ", kTrue);
    }

    std::string setMeets(FeatureId f, const std::set<std::string>& s) const {
        if (s.empty()) return kFalse;
        return "EXISTS " + setRows(f, " AND " + alias_ + "_set.member IN " + memberList(s));
    }

    std::string guarded(FeatureId f, const std::string& pred) const {
        if (pred == kFalse) return kFalse;
        return "(" + column(f) + " IS NOT NULL AND " + pred + ")";
    }

    std::string leaf(const SimpleCondition& c) const {
        const FeatureId f = c.feature();
        if (!schema_.contains(f)) return kFalse;
        const auto& decl = schema_.feature(f);
        const auto kind = kindFor(decl.datatype);

        if (c.op() == Operator::IsA) {
            const auto* wanted = std::get_if<Identifier>(&c.value());
            if (!wanted) return kFalse;
            if (decl.classFeature) return guarded(f, memberIs(*decl.classFeature, wanted->value));
            return decl.classes.contains(wanted->value) ? guarded(f, kTrue) : kFalse;
        }

        if (c.hasSetOperand()) {
            const auto memberKind = kind == ValueKind::IdentifierSet ? ValueKind::Identifier : kind;
            for (const auto& v : c.values())
                if (kindOf(v) != memberKind) return kFalse;
            if (kind == ValueKind::IdentifierSet) {
                std::set<std::string> s;
                for (const auto& v : c.values()) s.insert(std::get<Identifier>(v).value);
                switch (c.op()) {
                    case Operator::HasPart: return guarded(f, setCovers(f, s));
                    case Operator::IsPartOf: return guarded(f, setWithin(f, s));
                    case Operator::IsAllOf: return guarded(f, "(" + setWithin(f, s) + " AND " + setCovers(f, s) + ")");
                    case Operator::IsAnyOf: return guarded(f, setMeets(f, s));
                    case Operator::IsNoneOf: return guarded(f, "(NOT " + setMeets(f, s) + ")");
                    default: return kFalse;
                }
            }
            const auto& s = c.values();
            std::vector<std::string> lits;
            for (const auto& v : s) lits.push_back(literal(v));
            const auto list = join(lits, ", ", "()");
            const auto col = column(f);
            switch (c.op()) {
                case Operator::HasPart:
                    if (s.empty()) return guarded(f, kTrue);
                    return s.size() == 1 ? guarded(f, col + " = " + lits.front()) : kFalse;
                case Operator::IsAllOf: return s.size() == 1 ? guarded(f, col + " = " + lits.front()) : kFalse;
                case Operator::IsPartOf:
                case Operator::IsAnyOf: return s.empty() ? kFalse : guarded(f, col + " IN " + list);
                case Operator::IsNoneOf: return s.empty() ? guarded(f, kTrue) : guarded(f, col + " NOT IN " + list);
                default: return kFalse;
            }
        }

        const auto& v = c.value();
        if (kindOf(v) != kind) return kFalse;
        if (kind == ValueKind::IdentifierSet) {
            const auto& s = std::get<IdentifierSet>(v).members;
            auto equal = "(" + setWithin(f, s) + " AND " + setCovers(f, s) + ")";
            if (c.op() == Operator::Eq) return guarded(f, equal);
            if (c.op() == Operator::Neq) return guarded(f, "(NOT " + equal + ")");
            return kFalse;
        }
        const bool ordered = kind != ValueKind::Identifier;
        const char* op = nullptr;
        switch (c.op()) {
            case Operator::Eq: op = "="; break;
            case Operator::Neq: op = "<>"; break;
            case Operator::Lt: op = ordered ? "<" : nullptr; break;
            case Operator::Lteq: op = ordered ? "<=" : nullptr; break;
            case Operator::Gt: op = ordered ? ">" : nullptr; break;
            case Operator::Gteq: op = ordered ? ">=" : nullptr; break;
            default: break;
        }
        if (!op) return kFalse;
        return guarded(f, column(f) + " " + op + " " + literal(v));
    }

    const FeatureSchema& schema_;
    std::string alias_;
    std::vector<std::string> columns_;
};

std::string unionAll(const std::vector<std::string>& parts, const std::string& empty) {
    if (parts.empty()) return empty;
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "\nUNION ALL\n";
        out += parts[i];
    }
    return out;
}

std::string orOf(const std::vector<EventRule>& rules, const PredicateWriter& w) {
    std::vector<std::string> parts;
    for (const auto& r : rules) parts.push_back(w.rule(r));
    return join(parts, " OR ", kFalse);
}

EmittedQuery emitLite(const LitePolicy& policy, const FeatureSchema& schema) {
    EmittedQuery q;
    q.ddl = emitWorldDdl(schema);
    PredicateWriter w(schema, "w");
    q.permissions = "SELECT w.* FROM world AS w WHERE NOT " + orOf(policy.permissions(), w);
    q.prohibitions = "SELECT w.* FROM world AS w WHERE " + orOf(policy.prohibitions(), w);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < policy.obligations().size(); ++i) {
        const auto& o = policy.obligations()[i];
        parts.push_back("SELECT " + quoteText(displayName(o, "obligation[" + std::to_string(i) + "]")) +
                        " AS obligation FROM (SELECT COUNT(*) AS n FROM world AS w WHERE " + w.rule(o) +
                        ") AS m WHERE m.n = 0");
    }
    q.obligations = unionAll(parts, "SELECT 'none' AS obligation FROM world AS w WHERE 1 = 0");
    return q;
}

}// namespace

std::string sanitizeColumnName(std::string_view featureName) {
    std::string out;
    for (unsigned char c : featureName) out += std::isalnum(c) ? static_cast<char>(std::tolower(c)) : '_';
    if (out.empty() || std::isdigit(static_cast<unsigned char>(out.front()))) out = "c_" + out;
    return out;
}

std::string emitWorldDdl(const FeatureSchema& schema) {
    const auto cols = columnNames(schema);
    std::string ddl = "CREATE TABLE world (\n  event_id INTEGER NOT NULL PRIMARY KEY";
    for (std::size_t i = 0; i < cols.size(); ++i)
        ddl += ",\n  " + quoteIdent(cols[i]) + " " + sqlType(schema.feature(i).datatype);
    ddl += "\n);\nCREATE TABLE world_sets (\n  event_id INTEGER NOT NULL,\n  feature VARCHAR(255) NOT NULL,\n"
           "  member VARCHAR(1024) NOT NULL\n);\n";
    return ddl;
}

std::string emitWorldInserts(const World& world, const FeatureSchema& schema) {
    requireConforms(world, schema);
    const auto cols = columnNames(schema);
    std::string header = "INSERT INTO world (event_id";
    for (const auto& c : cols) header += ", " + quoteIdent(c);
    header += ") VALUES (";
    std::string out;
    std::size_t id = 0;
    for (const auto& e : world) {
        ++id;
        out += header + std::to_string(id);
        for (std::size_t i = 0; i < e.size(); ++i) out += ", " + literal(e[i]);
        out += ");\n";
        for (std::size_t i = 0; i < e.size(); ++i)
            if (const auto* s = std::get_if<IdentifierSet>(&e[i]))
                for (const auto& m : s->members)
                    out += "INSERT INTO world_sets (event_id, feature, member) VALUES (" + std::to_string(id) + ", " +
                        quoteText(cols[i]) + ", " + quoteText(m) + ");\n";
    }
    return out;
}

std::string emitRulePredicate(const EventRule& rule, const FeatureSchema& schema, std::string_view alias) {
    return PredicateWriter(schema, alias).rule(rule);
}

EmittedQuery emitViolationQueries(const LitePolicy& policy, const FeatureSchema& schema) {
    return emitLite(policy, schema);
}

EmittedQuery emitViolationQueries(const FullPolicy& policy, const FeatureSchema& schema) {
    auto q = emitLite(policy.lite(), schema);
    PredicateWriter e(schema, "e");
    PredicateWriter d(schema, "d");
    PredicateWriter c(schema, "c");
    PredicateWriter s(schema, "s");
    const auto et = e.column(kDatetimeFeature);
    const auto dt = d.column(kDatetimeFeature);
    const auto ct = c.column(kDatetimeFeature);
    const std::string empty = "SELECT 0 AS tuple_index, w.event_id AS event_id FROM world AS w WHERE 1 = 0";
    auto head = [](std::size_t i) { return "SELECT " + std::to_string(i) + " AS tuple_index, e.event_id AS event_id FROM world AS e WHERE "; };
    auto exists = [](const PredicateWriter& alias, const char* name, const EventRule& r, const std::string& when) {
        return std::string("EXISTS (SELECT 1 FROM world AS ") + name + " WHERE " + alias.rule(r) + when + ")";
    };

    std::vector<std::string> parts;
    for (std::size_t i = 0; i < policy.duties().size(); ++i) {
        const auto& t = policy.duties()[i];
        parts.push_back(head(i) + e.rule(t.permission) + " AND NOT " + exists(d, "d", t.duty, " AND " + dt + " <= " + et));
    }
    q.extraClauses.emplace_back("permission-duties", unionAll(parts, empty));

    parts.clear();
    for (std::size_t i = 0; i < policy.dutiesWithConsequence().size(); ++i) {
        const auto& t = policy.dutiesWithConsequence()[i];
        parts.push_back(head(i) + e.rule(t.permission) + " AND NOT " +
                        exists(d, "d", t.duty, " AND " + dt + " <= " + et) + " AND (NOT " +
                        exists(d, "d", t.duty, " AND " + dt + " >= " + et) + " OR NOT " +
                        exists(c, "c", t.consequence, " AND " + ct + " >= " + et) + ")");
    }
    q.extraClauses.emplace_back("permission-duties-with-consequences", unionAll(parts, empty));

    parts.clear();
    for (std::size_t i = 0; i < policy.remedies().size(); ++i) {
        const auto& t = policy.remedies()[i];
        parts.push_back(head(i) + e.rule(t.prohibition) + " AND NOT " +
                        exists(d, "d", t.remedy, " AND " + dt + " >= " + et));
    }
    q.extraClauses.emplace_back("prohibition-remedies", unionAll(parts, empty));

    parts.clear();
    for (std::size_t i = 0; i < policy.obligationConsequences().size(); ++i) {
        const auto& t = policy.obligationConsequences()[i];
        const auto soft = exists(s, "s", withoutDeadlines(t.obligation), "");
        std::vector<std::string> breaches;
        for (auto deadline : deadlinesOf(t.obligation))
            breaches.push_back("NOT (" + soft + " AND " +
                               exists(c, "c", t.consequence, " AND " + ct + " >= " + std::to_string(deadline)) + ")");
        PredicateWriter w(schema, "w");
        parts.push_back("SELECT " + std::to_string(i) +
                        " AS tuple_index, NULL AS event_id FROM (SELECT COUNT(*) AS n FROM world AS w WHERE " +
                        w.rule(t.obligation) + ") AS m WHERE m.n = 0 AND " + join(breaches, " OR ", kFalse));
    }
    q.extraClauses.emplace_back("obligation-consequences", unionAll(parts, empty));
    return q;
}

}// namespace odrl
