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

namespace odrl {

namespace internal {

std::optional<Event> findEvent(const WitnessDomain& domain, const std::vector<const EventRule*>& all,
                               const std::vector<const EventRule*>& none, const CompareOptions& options) {
    if (all.empty()) return std::nullopt;
    auto lists = domain.restrictedTo(*all.front());
    for (std::size_t i = 1; i < all.size(); ++i) intersect(lists, domain.restrictedTo(*all[i]));
    requireWithinBudget(lists, options);
    std::optional<Event> found;
    WitnessDomain::odometer(lists, [&](const Event& e) {
        for (const auto* r : all)
            if (!matchUnchecked(*r, e, domain.schema())) return true;
        for (const auto* r : none)
            if (matchUnchecked(*r, e, domain.schema())) return true;
        found = e;
        return false;
    });
    return found;
}

std::optional<EventRule> conjoin(const EventRule& a, const EventRule& b, const FeatureSchema& schema) {
    for (FeatureId k = 0; k < schema.size(); ++k) {
        if (!schema.isCoreComponent(k)) continue;
        auto x = a.topLevelEquality(k);
        auto y = b.topLevelEquality(k);
        if (x && y && *x != *y) return std::nullopt;
    }
    auto conditions = a.conditions();
    conditions.insert(conditions.end(), b.conditions().begin(), b.conditions().end());
    auto residual = a.residual();
    residual.insert(residual.end(), b.residual().begin(), b.residual().end());
    return EventRule(std::move(conditions), a.label(), std::move(residual));
}

}// namespace internal

namespace {

void validate(std::initializer_list<const EventRule*> rules, const FeatureSchema& schema) {
    for (const auto* r : rules) requireWellFormed(*r, schema);
}

void validate(std::span<const EventRule> rules, const FeatureSchema& schema) {
    for (const auto& r : rules) requireWellFormed(r, schema);
}

bool subsetOf(const std::vector<Condition>& small, const std::vector<Condition>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}// namespace

std::optional<Event> containmentCounterexample(const EventRule& a, const EventRule& b, const FeatureSchema& schema,
                                               const CompareOptions& options) {
    validate({&a, &b}, schema);
    const EventRule* rules[] = {&a, &b};
    WitnessDomain domain(schema, rules, internal::domainOptions(options));
    return internal::findEvent(domain, {&a}, {&b}, options);
}

bool ruleContains(const EventRule& a, const EventRule& b, const FeatureSchema& schema, const CompareOptions& options) {
    if (a == b) {
        validate({&a}, schema);
        return true;
    }
    return !containmentCounterexample(a, b, schema, options);
}

std::optional<Event> overlapWitness(const EventRule& a, const EventRule& b, const FeatureSchema& schema,
                                    const CompareOptions& options) {
    validate({&a, &b}, schema);
    const EventRule* rules[] = {&a, &b};
    WitnessDomain domain(schema, rules, internal::domainOptions(options));
    return internal::findEvent(domain, {&a, &b}, {}, options);
}

bool rulesOverlap(const EventRule& a, const EventRule& b, const FeatureSchema& schema, const CompareOptions& options) {
    return overlapWitness(a, b, schema, options).has_value();
}

bool isSatisfiable(const EventRule& rule, const FeatureSchema& schema, const CompareOptions& options) {
    validate({&rule}, schema);
    const EventRule* rules[] = {&rule};
    WitnessDomain domain(schema, rules, internal::domainOptions(options));
    return internal::findEvent(domain, {&rule}, {}, options).has_value();
}

std::optional<Event> ruleSetCounterexample(std::span<const EventRule> a, std::span<const EventRule> b,
                                           const FeatureSchema& schema, const CompareOptions& options) {
    validate(a, schema);
    validate(b, schema);
    std::vector<const EventRule*> rules;
    for (const auto& r : a) rules.push_back(&r);
    std::vector<const EventRule*> cover;
    for (const auto& r : b) cover.push_back(&r);
    rules.insert(rules.end(), cover.begin(), cover.end());
    WitnessDomain domain(schema, rules, internal::domainOptions(options));
    for (const auto& r : a)
        if (auto e = internal::findEvent(domain, {&r}, cover, options)) return e;
    return std::nullopt;
}

bool ruleSetContains(std::span<const EventRule> a, std::span<const EventRule> b, const FeatureSchema& schema,
                     const CompareOptions& options) {
    if (ruleSetSubsumedPairwise(a, b)) {
        validate(a, schema);
        validate(b, schema);
        return true;
    }
    return !ruleSetCounterexample(a, b, schema, options);
}

bool ruleSetSubsumedPairwise(std::span<const EventRule> a, std::span<const EventRule> b) {
    return std::all_of(a.begin(), a.end(), [&](const EventRule& x) {
        return std::any_of(b.begin(), b.end(), [&](const EventRule& y) {
            return subsetOf(y.conditions(), x.conditions()) && subsetOf(y.residual(), x.residual());
        });
    });
}

bool isConsistent(const LitePolicy& policy, const FeatureSchema& schema, const CompareOptions& options) {
    for (const auto& f : policy.prohibitions()) {
        for (const auto& p : policy.permissions())
            if (rulesOverlap(p, f, schema, options)) return false;
        for (const auto& o : policy.obligations())
            if (rulesOverlap(o, f, schema, options)) return false;
    }
    return ruleSetContains(policy.obligations(), policy.permissions(), schema, options);
}

}// namespace odrl
