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

#include <odrl/condition_eval.hpp>
#include <odrl/error.hpp>
#include <odrl/matcher.hpp>

#include <algorithm>
#include <map>

namespace odrl {

namespace {

bool isCoreEquality(const Condition& c, FeatureId k) {
    return c.isSimple() && c.simple().feature() == k && c.simple().op() == Operator::Eq && !c.simple().hasSetOperand();
}

std::string describe(const FeatureSchema& schema, FeatureId f) {
    return schema.contains(f) ? schema.feature(f).name : "#" + std::to_string(f);
}

bool isDeadline(const SimpleCondition& s) { return s.feature() == kDatetimeFeature && s.op() == Operator::Lteq; }

bool mentionsDeadline(const Condition& c) {
    bool found = false;
    c.forEachSimple([&](const SimpleCondition& s) { found = found || isDeadline(s); });
    return found;
}

/// Relaxes deadline leaves: true where they occur positively, false under an
/// odd number of negations, so the result is implied by the input.
Condition stripDeadlines(const Condition& c, bool positive) {
    if (!mentionsDeadline(c)) return c;
    const auto& ops = c.operands();
    switch (c.kind()) {
        case Condition::Kind::Simple: return positive ? Condition::alwaysTrue() : Condition::disjunction({});
        case Condition::Kind::Not: return Condition::negation(stripDeadlines(ops.front(), !positive));
        case Condition::Kind::Xor:
            return Condition::disjunction(
                {Condition::conjunction({stripDeadlines(ops[0], positive), Condition::negation(stripDeadlines(ops[1], !positive))}),
                 Condition::conjunction({Condition::negation(stripDeadlines(ops[0], !positive)), stripDeadlines(ops[1], positive)})});
        case Condition::Kind::And:
        case Condition::Kind::Or: {
            std::vector<Condition> out;
            for (const auto& o : ops) out.push_back(stripDeadlines(o, positive));
            return c.kind() == Condition::Kind::And ? Condition::conjunction(std::move(out))
                                                    : Condition::disjunction(std::move(out));
        }
    }
    return c;
}

}// namespace

WellFormednessReport checkWellFormed(const EventRule& rule, const FeatureSchema& schema, const std::string& name) {
    WellFormednessReport report;
    const std::string ruleName = name.empty() ? displayName(rule, "rule") : name;
    auto violate = [&](int item, std::vector<FeatureId> features, std::string detail) {
        report.violations.push_back({ruleName, item, std::move(features), std::move(detail)});
    };

    for (FeatureId f : rule.features())
        if (!schema.contains(f)) violate(0, {f}, "feature " + std::to_string(f) + " is not declared in the schema");
    if (!report.ok()) return report;

    if (!rule.action()) violate(1, {kActionFeature}, "no <Action, eq, a> condition");

    // Item 2: a core component in use is fixed by exactly one top-level equality.
    std::map<FeatureId, int> uses;
    for (const auto& c : rule.conditions()) {
        std::set<FeatureId> components;
        for (FeatureId f : c.features()) {
            const auto g = schema.component(f);
            if (!g.isRuleWide()) components.insert(g.target());
        }
        for (FeatureId k : components) uses[k];
        for (FeatureId k : c.features())
            if (schema.isCoreComponent(k)) ++uses[k];
    }
    for (const auto& [k, count] : uses) {
        const bool fixed = std::any_of(rule.conditions().begin(), rule.conditions().end(),
                                       [k = k](const Condition& c) { return isCoreEquality(c, k); });
        if (!fixed && k != kActionFeature)
            violate(2, {k}, "component " + describe(schema, k) + " is used without a top-level equality");
        else if (fixed && count > 1)
            violate(2, {k}, "component " + describe(schema, k) + " is used in more than one condition");
    }

    // Item 3: complex conditions stay within one component.
    for (const auto& c : rule.conditions()) {
        if (c.isSimple()) continue;
        std::set<ComponentRef> gammas;
        for (FeatureId f : c.features()) gammas.insert(schema.component(f));
        if (gammas.size() > 1) {
            auto fs = c.features();
            violate(3, {fs.begin(), fs.end()}, "complex condition mixes features of different components");
        }
    }
    return report;
}

void requireWellFormed(const EventRule& rule, const FeatureSchema& schema, const std::string& name) {
    auto report = checkWellFormed(rule, schema, name);
    if (report.ok()) return;
    const auto& v = report.violations.front();
    throw PolicyError("ill-formed-rule", "rule '" + v.rule + "' is not well-formed (item " + std::to_string(v.item) +
                                             "): " + v.detail);
}

bool matchUnchecked(const EventRule& rule, const Event& e, const FeatureSchema& schema) {
    for (const auto& c : rule.conditions())
        if (!evalComplex(c, e, schema)) return false;
    for (const auto& c : rule.residual())
        if (!evalComplex(c, e, schema)) return false;
    return true;
}

bool match(const EventRule& rule, const Event& e, const FeatureSchema& schema) {
    requireWellFormed(rule, schema);
    return matchUnchecked(rule, e, schema);
}

EventRule withoutDeadlines(const EventRule& rule) {
    auto strip = [](const std::vector<Condition>& in) {
        std::vector<Condition> out;
        for (const auto& c : in) {
            if (c.isSimple() && isDeadline(c.simple())) continue;
            out.push_back(stripDeadlines(c, true));
        }
        return out;
    };
    return EventRule(strip(rule.conditions()), rule.label(), strip(rule.residual()));
}

bool softmatch(const EventRule& rule, const Event& e, const FeatureSchema& schema) {
    requireWellFormed(rule, schema);
    return matchUnchecked(withoutDeadlines(rule), e, schema);
}

}// namespace odrl
