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

#include <odrl/reasoner.hpp>

#include <algorithm>

namespace odrl {

namespace {

bool isActionEquality(const Condition& c) {
    return c.isSimple() && c.simple().feature() == kActionFeature && c.simple().op() == Operator::Eq &&
        !c.simple().hasSetOperand();
}

EventRule withAction(const EventRule& rule, const std::string& original, const std::string& action) {
    if (action == original) return rule;
    std::vector<Condition> conditions;
    conditions.reserve(rule.conditions().size());
    for (const auto& c : rule.conditions())
        conditions.push_back(isActionEquality(c) ? Condition(SimpleCondition(kActionFeature, Operator::Eq, id(action)))
                                                 : c);
    std::string label = rule.label().empty() ? std::string{} : rule.label() + "[" + action + "]";
    return EventRule(std::move(conditions), std::move(label), rule.residual());
}

/// The permission and its specialisations, original first, then by action name.
std::vector<EventRule> specialise(const EventRule& rule, const ActionVocabulary& vocabulary) {
    std::vector<EventRule> out{rule};
    auto action = rule.action();
    if (!action) return out;
    for (const auto& a : vocabulary.subActions(*action))
        if (a != *action) out.push_back(withAction(rule, *action, a));
    return out;
}

template<typename T>
void pushUnique(std::vector<T>& v, T item) {
    if (std::find(v.begin(), v.end(), item) == v.end()) v.push_back(std::move(item));
}

}// namespace

LitePolicy saturate(const LitePolicy& policy, const ActionVocabulary& vocabulary, SaturationConfig config) {
    if (!config.enabled || vocabulary.empty()) return policy;
    std::vector<EventRule> permissions;
    for (const auto& p : policy.permissions())
        for (auto& r : specialise(p, vocabulary)) permissions.push_back(std::move(r));
    return LitePolicy(std::move(permissions), policy.prohibitions(), policy.obligations());
}

FullPolicy saturate(const FullPolicy& policy, const ActionVocabulary& vocabulary, SaturationConfig config) {
    if (!config.enabled || vocabulary.empty()) return policy;
    std::vector<DutyPair> duties;
    for (const auto& t : policy.duties())
        for (auto& p : specialise(t.permission, vocabulary)) pushUnique(duties, DutyPair{std::move(p), t.duty});
    std::vector<DutyConsequence> withConsequence;
    for (const auto& t : policy.dutiesWithConsequence())
        for (auto& p : specialise(t.permission, vocabulary))
            pushUnique(withConsequence, DutyConsequence{std::move(p), t.duty, t.consequence});
    return FullPolicy(saturate(policy.lite(), vocabulary, config), std::move(duties), std::move(withConsequence),
                      policy.remedies(), policy.obligationConsequences());
}

}// namespace odrl
