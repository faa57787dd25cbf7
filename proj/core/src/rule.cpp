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
#include <odrl/rule.hpp>

#include <algorithm>

namespace odrl {

namespace {

void sortUnique(std::vector<Condition>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<EventRule> dedupe(std::vector<EventRule> rules) {
    std::vector<EventRule> out;
    out.reserve(rules.size());
    for (auto& r : rules)
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    return out;
}

bool contains(const std::vector<EventRule>& set, const EventRule& r) {
    return std::find(set.begin(), set.end(), r) != set.end();
}

[[noreturn]] void invariant(const std::string& what) { throw PolicyError("policy-invariant-violation", what); }

}// namespace

EventRule::EventRule(std::vector<Condition> conditions, std::string label, std::vector<Condition> residual)
    : conditions_(std::move(conditions)), residual_(std::move(residual)), label_(std::move(label)) {
    sortUnique(conditions_);
    sortUnique(residual_);
}

EventRule EventRule::withLabel(std::string label) const {
    EventRule copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

std::set<FeatureId> EventRule::features() const {
    std::set<FeatureId> out;
    for (const auto* list : {&conditions_, &residual_})
        for (const auto& c : *list) c.forEachSimple([&](const SimpleCondition& s) { out.insert(s.feature()); });
    return out;
}

std::optional<Value> EventRule::topLevelEquality(FeatureId f) const {
    for (const auto& c : conditions_)
        if (c.isSimple() && c.simple().feature() == f && c.simple().op() == Operator::Eq) return c.simple().value();
    return std::nullopt;
}

std::optional<std::string> EventRule::action() const {
    auto v = topLevelEquality(kActionFeature);
    if (v && std::holds_alternative<Identifier>(*v)) return std::get<Identifier>(*v).value;
    return std::nullopt;
}

std::strong_ordering operator<=>(const EventRule& a, const EventRule& b) {
    if (auto c = std::lexicographical_compare_three_way(a.conditions_.begin(), a.conditions_.end(),
                                                        b.conditions_.begin(), b.conditions_.end());
        c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.residual_.begin(), a.residual_.end(), b.residual_.begin(),
                                                  b.residual_.end());
}

std::string displayName(const EventRule& rule, const std::string& fallback) {
    return rule.label().empty() ? fallback : rule.label();
}

LitePolicy::LitePolicy(std::vector<EventRule> permissions, std::vector<EventRule> prohibitions,
                       std::vector<EventRule> obligations)
    : permissions_(dedupe(std::move(permissions))), prohibitions_(dedupe(std::move(prohibitions))),
      obligations_(dedupe(std::move(obligations))) {}

bool LitePolicy::hasPermission(const EventRule& r) const { return contains(permissions_, r); }
bool LitePolicy::hasProhibition(const EventRule& r) const { return contains(prohibitions_, r); }
bool LitePolicy::hasObligation(const EventRule& r) const { return contains(obligations_, r); }

std::vector<const EventRule*> LitePolicy::allRules() const {
    std::vector<const EventRule*> out;
    for (const auto* set : {&permissions_, &prohibitions_, &obligations_})
        for (const auto& r : *set) out.push_back(&r);
    return out;
}

std::vector<std::int64_t> deadlinesOf(const EventRule& rule) {
    std::vector<std::int64_t> out;
    for (const auto& c : rule.conditions()) {
        if (!c.isSimple()) continue;
        const auto& s = c.simple();
        if (s.feature() == kDatetimeFeature && s.op() == Operator::Lteq && std::holds_alternative<Timestamp>(s.value()))
            out.push_back(std::get<Timestamp>(s.value()).ticks);
    }
    return out;
}

FullPolicy::FullPolicy(LitePolicy lite, std::vector<DutyPair> duties, std::vector<DutyConsequence> dutiesWithConsequence,
                       std::vector<RemedyPair> remedies, std::vector<ObligationConsequence> obligationConsequences)
    : lite_(std::move(lite)), duties_(std::move(duties)), dutiesWithConsequence_(std::move(dutiesWithConsequence)),
      remedies_(std::move(remedies)), obligationConsequences_(std::move(obligationConsequences)) {
    auto name = [](const EventRule& r) { return r.label().empty() ? std::string("<unlabelled rule>") : "'" + r.label() + "'"; };
    for (const auto& [perm, duty] : duties_) {
        if (!lite_.hasPermission(perm)) invariant("duty permission " + name(perm) + " is not in P");
        if (!lite_.hasPermission(duty)) invariant("duty " + name(duty) + " is not in P");
    }
    for (const auto& [perm, duty, consequence] : dutiesWithConsequence_) {
        if (!lite_.hasPermission(perm)) invariant("duty permission " + name(perm) + " is not in P");
        if (!lite_.hasPermission(duty)) invariant("duty " + name(duty) + " is not in P");
        if (!lite_.hasPermission(consequence)) invariant("duty consequence " + name(consequence) + " is not in P");
    }
    for (const auto& [prohibition, remedy] : remedies_) {
        if (lite_.hasProhibition(prohibition)) invariant("remedied prohibition " + name(prohibition) + " must not be in F");
        if (!lite_.hasPermission(remedy)) invariant("remedy " + name(remedy) + " is not in P");
    }
    for (const auto& [obligation, consequence] : obligationConsequences_) {
        if (lite_.hasObligation(obligation)) invariant("obligation " + name(obligation) + " with a consequence must not be in O");
        if (!lite_.hasPermission(consequence)) invariant("obligation consequence " + name(consequence) + " is not in P");
        if (deadlinesOf(obligation).empty())
            invariant("obligation " + name(obligation) + " with a consequence needs a <Datetime, lteq, t> deadline");
    }
}

bool FullPolicy::isLite() const {
    return duties_.empty() && dutiesWithConsequence_.empty() && remedies_.empty() && obligationConsequences_.empty();
}

std::vector<const EventRule*> FullPolicy::allRules() const {
    auto out = lite_.allRules();
    for (const auto& t : duties_) out.insert(out.end(), {&t.permission, &t.duty});
    for (const auto& t : dutiesWithConsequence_) out.insert(out.end(), {&t.permission, &t.duty, &t.consequence});
    for (const auto& t : remedies_) out.insert(out.end(), {&t.prohibition, &t.remedy});
    for (const auto& t : obligationConsequences_) out.insert(out.end(), {&t.obligation, &t.consequence});
    return out;
}

}// namespace odrl
