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

#include "compare_internal.hpp"

#include <algorithm>
#include <map>

namespace odrl {

namespace {

using Group = std::vector<Condition>;

/// Group key: 0 for rule-wide constraints, k+1 for component k.
std::size_t groupKey(const Condition& c, const FeatureSchema& schema) {
    std::size_t key = 0;
    for (FeatureId f : c.features()) {
        const auto g = schema.component(f);
        if (!g.isRuleWide()) key = std::max(key, g.target() + 1);
    }
    return key;
}

Condition negated(const Group& g) {
    return Condition::negation(g.size() == 1 ? g.front() : Condition::conjunction(g));
}

void checkBudget(std::size_t n, const CompareOptions& options) {
    if (n > options.maxDisjuncts)
        throw ComparisonError("normalization-blowup", "difference needs more than " +
                                                          std::to_string(options.maxDisjuncts) + " rules");
}

std::vector<EventRule> subtractAll(std::vector<EventRule> pieces, const std::vector<EventRule>& prohibitions,
                                   const FeatureSchema& schema, const CompareOptions& options) {
    for (const auto& f : prohibitions) {
        std::vector<EventRule> next;
        for (const auto& p : pieces) {
            auto d = ruleDifference(p, f, schema, options);
            next.insert(next.end(), d.begin(), d.end());
            checkBudget(next.size(), options);
        }
        pieces = std::move(next);
    }
    return pieces;
}

void dedupe(std::vector<EventRule>& rules) {
    std::vector<EventRule> out;
    for (auto& r : rules)
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    rules = std::move(out);
}

/// Drops every rule contained in another one (keeping the first of equivalent rules).
void dropContained(std::vector<EventRule>& rules, const FeatureSchema& schema, const CompareOptions& options) {
    std::vector<bool> dropped(rules.size(), false);
    for (std::size_t i = 0; i < rules.size(); ++i)
        for (std::size_t j = 0; j < rules.size() && !dropped[i]; ++j)
            if (i != j && !dropped[j] && ruleContains(rules[i], rules[j], schema, options)) dropped[i] = true;
    std::vector<EventRule> kept;
    for (std::size_t i = 0; i < rules.size(); ++i)
        if (!dropped[i]) kept.push_back(std::move(rules[i]));
    rules = std::move(kept);
}

Condition asConjunction(const EventRule& r) {
    std::vector<Condition> all = r.conditions();
    all.insert(all.end(), r.residual().begin(), r.residual().end());
    return Condition::conjunction(std::move(all));
}

EventRule unsatisfiable(const EventRule& o) {
    auto conditions = o.conditions();
    conditions.emplace_back(SimpleCondition(kDatetimeFeature, Operator::Lt, ts(0)));
    conditions.emplace_back(SimpleCondition(kDatetimeFeature, Operator::Gt, ts(0)));
    return EventRule(std::move(conditions), o.label());
}

}// namespace

std::vector<EventRule> ruleDifference(const EventRule& a, const EventRule& b, const FeatureSchema& schema,
                                      const CompareOptions& options) {
    if (!rulesOverlap(a, b, schema, options)) return {a};
    if (ruleContains(a, b, schema, options)) return {};

    std::map<std::size_t, Group> groups;
    for (const auto& c : b.conditions())
        if (!std::binary_search(a.conditions().begin(), a.conditions().end(), c))
            groups[groupKey(c, schema)].push_back(c);
    Group residualGroup;
    for (const auto& c : b.residual())
        if (!std::binary_search(a.residual().begin(), a.residual().end(), c)) residualGroup.push_back(c);

    std::vector<std::pair<Group, bool>> ordered;
    for (auto& [key, g] : groups) ordered.emplace_back(std::move(g), false);
    if (!residualGroup.empty()) ordered.emplace_back(std::move(residualGroup), true);

    std::vector<EventRule> pieces;
    auto base = a.conditions();
    auto residual = a.residual();
    for (auto& [g, fromResidual] : ordered) {
        std::optional<EventRule> piece;
        if (!fromResidual) {
            auto conditions = base;
            conditions.push_back(negated(g));
            EventRule candidate(std::move(conditions), a.label(), residual);
            if (checkWellFormed(candidate, schema).ok()) piece = std::move(candidate);
        }
        if (!piece) {
            auto extra = residual;
            extra.push_back(negated(g));
            piece = EventRule(base, a.label(), std::move(extra));
        }
        if (isSatisfiable(*piece, schema, options)) pieces.push_back(std::move(*piece));
        checkBudget(pieces.size(), options);
        auto& sink = fromResidual ? residual : base;
        sink.insert(sink.end(), g.begin(), g.end());
    }
    return pieces;
}

LitePolicy normalize(const LitePolicy& policy, const FeatureSchema& schema, const CompareOptions& options) {
    for (const auto* r : policy.allRules()) requireWellFormed(*r, schema);

    std::vector<EventRule> permissions = subtractAll(policy.permissions(), policy.prohibitions(), schema, options);
    dedupe(permissions);

    std::vector<EventRule> obligations;
    for (const auto& o : policy.obligations()) {
        std::vector<EventRule> pieces;
        for (auto& d : subtractAll({o}, policy.prohibitions(), schema, options)) {
            const EventRule single[] = {d};
            if (ruleSetContains(single, permissions, schema, options)) {
                pieces.push_back(std::move(d));
                continue;
            }
            for (const auto& p : permissions) {
                auto both = internal::conjoin(d, p, schema);
                if (both && isSatisfiable(*both, schema, options)) pieces.push_back(std::move(*both));
                checkBudget(pieces.size(), options);
            }
        }
        dedupe(pieces);
        dropContained(pieces, schema, options);
        if (pieces.empty()) {
            obligations.push_back(unsatisfiable(o));
        } else if (pieces.size() == 1) {
            obligations.push_back(pieces.front().withLabel(o.label()));
        } else {
            std::vector<Condition> alternatives;
            for (const auto& p : pieces) alternatives.push_back(asConjunction(p));
            obligations.emplace_back(o.conditions(), o.label(),
                                     std::vector<Condition>{Condition::disjunction(std::move(alternatives))});
        }
    }
    return LitePolicy(std::move(permissions), {}, std::move(obligations));
}

}// namespace odrl
