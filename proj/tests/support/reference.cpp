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

#include "reference.hpp"

#include <odrl/query_emitter.hpp>

#include <sqlite3.h>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace odrl::test {

namespace {

/// A scalar flattened into (kind tag, number, text) for uniform comparison.
struct Flat {
    int kind;
    double number = 0;
    std::string text;
};

std::optional<Flat> flatten(const Value& v) {
    if (auto* t = std::get_if<Timestamp>(&v)) return Flat{1, static_cast<double>(t->ticks), {}};
    if (auto* n = std::get_if<Number>(&v)) return Flat{2, n->value, {}};
    if (auto* s = std::get_if<Text>(&v)) return Flat{3, 0, s->value};
    if (auto* i = std::get_if<Identifier>(&v)) return Flat{4, 0, i->value};
    return std::nullopt;
}

/// -1, 0, 1, or nullopt when the two values cannot be compared with `ordered`.
std::optional<int> compareFlat(const Value& a, const Value& b, bool ordered) {
    if (a.index() == 0 || b.index() == 0 || a.index() != b.index()) return std::nullopt;
    if (auto* x = std::get_if<IdentifierSet>(&a)) {
        if (ordered) return std::nullopt;
        return *x == std::get<IdentifierSet>(b) ? 0 : 1;
    }
    const auto fa = *flatten(a);
    const auto fb = *flatten(b);
    if (fa.kind == 4) {
        if (ordered) return std::nullopt;
        return fa.text == fb.text ? 0 : 1;
    }
    if (fa.kind == 3) return fa.text < fb.text ? -1 : fa.text == fb.text ? 0 : 1;
    return fa.number < fb.number ? -1 : fa.number == fb.number ? 0 : 1;
}

bool setOperator(Operator op, const Value& left, const ValueSet& right) {
    // Left side as a list of values; an identifier set contributes its members.
    std::vector<Value> l;
    if (auto* s = std::get_if<IdentifierSet>(&left)) {
        for (const auto& m : s->members) l.push_back(Identifier{m});
    } else {
        l.push_back(left);
    }
    const std::size_t memberIndex = std::holds_alternative<IdentifierSet>(left) ? 4 : left.index();
    for (const auto& r : right)
        if (r.index() != memberIndex) return false;
    auto inRight = [&](const Value& v) { return std::find(right.begin(), right.end(), v) != right.end(); };
    auto inLeft = [&](const Value& v) { return std::find(l.begin(), l.end(), v) != l.end(); };
    const bool leftInRight = std::all_of(l.begin(), l.end(), inRight);
    const bool rightInLeft = std::all_of(right.begin(), right.end(), inLeft);
    const bool common = std::any_of(l.begin(), l.end(), inRight);
    switch (op) {
        case Operator::HasPart: return rightInLeft;
        case Operator::IsPartOf: return leftInRight;
        case Operator::IsAllOf: return leftInRight && rightInLeft;
        case Operator::IsAnyOf: return common;
        case Operator::IsNoneOf: return !common;
        default: throw std::logic_error("not a set operator");
    }
}

bool simpleHolds(const SimpleCondition& c, const Event& e, const FeatureSchema& schema) {
    if (c.feature() >= e.size()) return false;
    const Value& left = e[c.feature()];
    if (left.index() == 0) return false;
    if (c.op() == Operator::IsA) {
        const auto& decl = schema.feature(c.feature());
        const auto* wanted = std::get_if<Identifier>(&c.value());
        if (!wanted) return false;
        if (decl.classFeature) {
            const auto* cls = std::get_if<IdentifierSet>(&e[*decl.classFeature]);
            return cls && cls->members.count(wanted->value) > 0;
        }
        return decl.classes.count(wanted->value) > 0;
    }
    if (c.hasSetOperand()) return setOperator(c.op(), left, c.values());
    const bool ordered = c.op() != Operator::Eq && c.op() != Operator::Neq;
    const auto cmp = compareFlat(left, c.value(), ordered);
    if (!cmp) return false;
    switch (c.op()) {
        case Operator::Eq: return *cmp == 0;
        case Operator::Neq: return *cmp != 0;
        case Operator::Lt: return *cmp < 0;
        case Operator::Lteq: return *cmp <= 0;
        case Operator::Gt: return *cmp > 0;
        case Operator::Gteq: return *cmp >= 0;
        default: return false;
    }
}

bool isDeadline(const SimpleCondition& c) {
    return c.feature() == kDatetimeFeature && c.op() == Operator::Lteq && !c.hasSetOperand();
}

bool evalWith(const Condition& c, const std::function<bool(const SimpleCondition&)>& leaf) {
    const auto& ops = c.operands();
    switch (c.kind()) {
        case Condition::Kind::Simple: return leaf(c.simple());
        case Condition::Kind::And:
            return std::all_of(ops.begin(), ops.end(), [&](const Condition& o) { return evalWith(o, leaf); });
        case Condition::Kind::Or:
            return std::any_of(ops.begin(), ops.end(), [&](const Condition& o) { return evalWith(o, leaf); });
        case Condition::Kind::Not: return !evalWith(ops[0], leaf);
        case Condition::Kind::Xor: return evalWith(ops[0], leaf) ^ evalWith(ops[1], leaf);
    }
    return false;
}

bool ruleHolds(const EventRule& rule, const std::function<bool(const Condition&)>& eval) {
    for (const auto& c : rule.conditions())
        if (!eval(c)) return false;
    for (const auto& c : rule.residual())
        if (!eval(c)) return false;
    return true;
}

}// namespace

bool refEval(const Condition& c, const Event& e, const FeatureSchema& schema) {
    return evalWith(c, [&](const SimpleCondition& s) { return simpleHolds(s, e, schema); });
}

bool refMatch(const EventRule& rule, const Event& e, const FeatureSchema& schema) {
    return ruleHolds(rule, [&](const Condition& c) { return refEval(c, e, schema); });
}

namespace {

/// Truth of c with deadline leaves read as `positive` when reached with
/// positive polarity and as its negation otherwise.
bool relaxed(const Condition& c, const Event& e, const FeatureSchema& schema, bool positive) {
    const auto& ops = c.operands();
    switch (c.kind()) {
        case Condition::Kind::Simple: return isDeadline(c.simple()) ? positive : simpleHolds(c.simple(), e, schema);
        case Condition::Kind::And:
            return std::all_of(ops.begin(), ops.end(), [&](const Condition& o) { return relaxed(o, e, schema, positive); });
        case Condition::Kind::Or:
            return std::any_of(ops.begin(), ops.end(), [&](const Condition& o) { return relaxed(o, e, schema, positive); });
        case Condition::Kind::Not: return !relaxed(ops[0], e, schema, !positive);
        case Condition::Kind::Xor:
            return (relaxed(ops[0], e, schema, positive) && !relaxed(ops[1], e, schema, !positive)) ||
                   (!relaxed(ops[0], e, schema, !positive) && relaxed(ops[1], e, schema, positive));
    }
    return false;
}

}// namespace

bool refSoftmatch(const EventRule& rule, const Event& e, const FeatureSchema& schema) {
    return ruleHolds(rule, [&](const Condition& c) { return relaxed(c, e, schema, true); });
}

RefLiteOutcome refEvaluateLite(const LitePolicy& p, const World& w, const FeatureSchema& schema) {
    RefLiteOutcome out;
    const auto& events = w.events();
    for (std::size_t i = 0; i < events.size(); ++i) {
        bool permitted = false;
        for (const auto& r : p.permissions()) permitted = permitted || refMatch(r, events[i], schema);
        if (!permitted) out.unpermitted.push_back(i);
        bool prohibited = false;
        for (const auto& r : p.prohibitions()) prohibited = prohibited || refMatch(r, events[i], schema);
        if (prohibited) out.prohibited.push_back(i);
    }
    for (std::size_t j = 0; j < p.obligations().size(); ++j) {
        bool met = false;
        for (const auto& e : events) met = met || refMatch(p.obligations()[j], e, schema);
        if (!met) out.unmetObligations.push_back(j);
    }
    return out;
}

RefFullOutcome refEvaluateFull(const FullPolicy& p, const World& w, const FeatureSchema& schema) {
    RefFullOutcome out;
    out.lite = refEvaluateLite(p.lite(), w, schema);
    const auto& ev = w.events();
    auto some = [&](const EventRule& r, const std::function<bool(const Event&)>& when) {
        for (const auto& e : ev)
            if (refMatch(r, e, schema) && when(e)) return true;
        return false;
    };
    for (std::size_t t = 0; t < p.duties().size(); ++t) {
        const auto& d = p.duties()[t];
        for (std::size_t i = 0; i < ev.size(); ++i) {
            const auto e0 = ev[i].timestamp();
            if (refMatch(d.permission, ev[i], schema) &&
                !some(d.duty, [&](const Event& x) { return x.timestamp() <= e0; }))
                out.duties.emplace_back(t, i);
        }
    }
    for (std::size_t t = 0; t < p.dutiesWithConsequence().size(); ++t) {
        const auto& d = p.dutiesWithConsequence()[t];
        for (std::size_t i = 0; i < ev.size(); ++i) {
            const auto e0 = ev[i].timestamp();
            if (!refMatch(d.permission, ev[i], schema)) continue;
            const bool prior = some(d.duty, [&](const Event& x) { return x.timestamp() <= e0; });
            const bool laterDuty = some(d.duty, [&](const Event& x) { return e0 <= x.timestamp(); });
            const bool laterConsequence = some(d.consequence, [&](const Event& x) { return e0 <= x.timestamp(); });
            if (!prior && (!laterDuty || !laterConsequence)) out.dutiesWithConsequence.emplace_back(t, i);
        }
    }
    for (std::size_t t = 0; t < p.remedies().size(); ++t) {
        const auto& r = p.remedies()[t];
        for (std::size_t i = 0; i < ev.size(); ++i) {
            const auto e0 = ev[i].timestamp();
            if (refMatch(r.prohibition, ev[i], schema) &&
                !some(r.remedy, [&](const Event& x) { return x.timestamp() >= e0; }))
                out.remedies.emplace_back(t, i);
        }
    }
    for (std::size_t t = 0; t < p.obligationConsequences().size(); ++t) {
        const auto& oc = p.obligationConsequences()[t];
        std::vector<std::int64_t> deadlines;
        for (const auto& c : oc.obligation.conditions())
            if (c.isSimple() && isDeadline(c.simple()))
                if (auto* ts = std::get_if<Timestamp>(&c.simple().value())) deadlines.push_back(ts->ticks);
        bool breached = false;
        const bool fulfilled = some(oc.obligation, [](const Event&) { return true; });
        bool late = false;
        for (const auto& e : ev) late = late || refSoftmatch(oc.obligation, e, schema);
        for (auto t0 : deadlines) {
            const bool consequence = some(oc.consequence, [&](const Event& x) { return x.timestamp() >= t0; });
            if (!fulfilled && !(late && consequence)) breached = true;
        }
        if (breached) out.obligationConsequences.push_back(t);
    }
    return out;
}

const std::vector<Event>& sampleGrid() {
    static const std::vector<Event> grid = [] {
        std::vector<Value> times, actions, actors, assets, numbers;
        for (std::int64_t t = 0; t <= 4; ++t) times.push_back(ts(t));
        for (const char* a : {"Read", "Print", "Play"}) actions.push_back(id(a));
        actors.push_back(Null{});
        for (const char* a : {"Alice", "Bob", "Carol"}) actors.push_back(id(a));
        assets.push_back(Null{});
        for (const char* a : {"Book", "Picture", "Video"}) assets.push_back(id(a));
        numbers.push_back(Null{});
        for (double n : {50.0, 100.0, 175.0, 250.0, 325.0, 400.0, 450.0, 500.0, 550.0}) numbers.push_back(num(n));
        std::vector<Event> out;
        for (const auto& t : times)
            for (const auto& a : actions)
                for (const auto& p : actors)
                    for (const auto& s : assets)
                        for (const auto& r : numbers)
                            for (const auto& g : numbers) out.emplace_back(std::vector<Value>{t, a, p, s, r, g});
        return out;
    }();
    return grid;
}

std::vector<Event> signatureRepresentatives(const std::vector<Event>& grid, const std::vector<const EventRule*>& rules,
                                            const FeatureSchema& schema) {
    std::map<std::vector<bool>, const Event*> seen;
    for (const auto& e : grid) {
        std::vector<bool> sig;
        sig.reserve(rules.size());
        for (const auto* r : rules) sig.push_back(refMatch(*r, e, schema));
        seen.emplace(std::move(sig), &e);
    }
    std::vector<Event> out;
    for (const auto& [sig, e] : seen) out.push_back(*e);
    return out;
}

bool refPolicyContained(const LitePolicy& p, const LitePolicy& q, const FeatureSchema& schema) {
    auto rules = p.allRules();
    for (const auto* r : q.allRules()) rules.push_back(r);
    // Per representative: whether it keeps each policy's P/F clauses clean and
    // which obligations it meets. Only events allowed by p can occur in a world valid for p.
    struct Row {
        bool qAllowed;
        std::uint64_t pMet;
        std::uint64_t qMet;
    };
    auto allowed = [&](const LitePolicy& x, const Event& e) {
        bool permitted = false;
        for (const auto& r : x.permissions()) permitted = permitted || refMatch(r, e, schema);
        for (const auto& r : x.prohibitions())
            if (refMatch(r, e, schema)) return false;
        return permitted;
    };
    auto met = [&](const LitePolicy& x, const Event& e) {
        std::uint64_t bits = 0;
        for (std::size_t j = 0; j < x.obligations().size(); ++j)
            if (refMatch(x.obligations()[j], e, schema)) bits |= std::uint64_t{1} << j;
        return bits;
    };
    std::vector<Row> rows;
    for (const auto& e : signatureRepresentatives(sampleGrid(), rules, schema))
        if (allowed(p, e)) rows.push_back({allowed(q, e), met(p, e), met(q, e)});
    const std::uint64_t pAll = (std::uint64_t{1} << p.obligations().size()) - 1;
    const std::uint64_t qAll = (std::uint64_t{1} << q.obligations().size()) - 1;
    const std::size_t maxSize = p.obligations().size() + 1;
    // Depth-first over subsets; returns false on a world valid for p and violating q.
    std::function<bool(std::size_t, std::size_t, bool, std::uint64_t, std::uint64_t)> search =
        [&](std::size_t from, std::size_t size, bool qClean, std::uint64_t pBits, std::uint64_t qBits) {
            if (pBits == pAll && !(qClean && qBits == qAll)) return false;
            if (size == maxSize) return true;
            for (std::size_t i = from; i < rows.size(); ++i)
                if (!search(i + 1, size + 1, qClean && rows[i].qAllowed, pBits | rows[i].pMet, qBits | rows[i].qMet))
                    return false;
            return true;
        };
    return search(0, 0, true, 0, 0);
}

bool refRuleContained(const EventRule& a, const EventRule& b, const FeatureSchema& schema) {
    for (const auto& e : sampleGrid())
        if (refMatch(a, e, schema) && !refMatch(b, e, schema)) return false;
    return true;
}

SqliteWorld::SqliteWorld(const World& world, const FeatureSchema& schema) {
    if (sqlite3_open(":memory:", &db_) != SQLITE_OK) throw std::runtime_error("cannot open sqlite database");
    exec(emitWorldDdl(schema));
    exec(emitWorldInserts(world, schema));
}

SqliteWorld::~SqliteWorld() { sqlite3_close(db_); }

void SqliteWorld::exec(const std::string& sql) {
    char* message = nullptr;
    if (sqlite3_exec(db_, sql.c_str(), nullptr, nullptr, &message) != SQLITE_OK) {
        std::string text = message ? message : "unknown error";
        sqlite3_free(message);
        throw std::runtime_error("sqlite: " + text + "\n" + sql);
    }
}

std::vector<std::vector<std::optional<std::string>>> SqliteWorld::query(const std::string& sql) {
    sqlite3_stmt* stmt = nullptr;
    if (sqlite3_prepare_v2(db_, sql.c_str(), -1, &stmt, nullptr) != SQLITE_OK)
        throw std::runtime_error(std::string("sqlite: ") + sqlite3_errmsg(db_) + "\n" + sql);
    std::vector<std::vector<std::optional<std::string>>> rows;
    int rc;
    while ((rc = sqlite3_step(stmt)) == SQLITE_ROW) {
        std::vector<std::optional<std::string>> row;
        for (int i = 0; i < sqlite3_column_count(stmt); ++i) {
            if (sqlite3_column_type(stmt, i) == SQLITE_NULL)
                row.emplace_back(std::nullopt);
            else
                row.emplace_back(reinterpret_cast<const char*>(sqlite3_column_text(stmt, i)));
        }
        rows.push_back(std::move(row));
    }
    sqlite3_finalize(stmt);
    if (rc != SQLITE_DONE) throw std::runtime_error(std::string("sqlite: ") + sqlite3_errmsg(db_));
    return rows;
}

std::vector<std::optional<std::string>> SqliteWorld::column(const std::string& sql, const std::string& name) {
    sqlite3_stmt* stmt = nullptr;
    if (sqlite3_prepare_v2(db_, sql.c_str(), -1, &stmt, nullptr) != SQLITE_OK)
        throw std::runtime_error(std::string("sqlite: ") + sqlite3_errmsg(db_) + "\n" + sql);
    int index = -1;
    for (int i = 0; i < sqlite3_column_count(stmt); ++i)
        if (name == sqlite3_column_name(stmt, i)) index = i;
    sqlite3_finalize(stmt);
    if (index < 0) throw std::runtime_error("no column " + name);
    std::vector<std::optional<std::string>> out;
    for (auto& row : query(sql)) out.push_back(std::move(row[static_cast<std::size_t>(index)]));
    return out;
}

}// namespace odrl::test
