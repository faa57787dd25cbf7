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

namespace odrl {

namespace {

LitePolicy prepare(const LitePolicy& p, const FeatureSchema& schema, const CompareOptions& options, const char* role) {
    for (const auto* r : p.allRules()) requireWellFormed(*r, schema);
    if (isConsistent(p, schema, options)) return p;
    if (!options.autoNormalize)
        throw ComparisonError("inconsistent-input", std::string("the ") + role + " policy is not consistent");
    return normalize(p, schema, options);
}

std::string nameOf(const std::vector<EventRule>& rules, const EventRule& r, const char* kind) {
    for (std::size_t i = 0; i < rules.size(); ++i)
        if (rules[i] == r) return displayName(r, std::string(kind) + "[" + std::to_string(i) + "]");
    return displayName(r, kind);
}

std::vector<ContainmentFailure> failuresOf(const LitePolicy& requester, const LitePolicy& provider,
                                           const FeatureSchema& schema, const CompareOptions& options,
                                           Direction direction) {
    const auto& obligations = requester.obligations();
    for (const auto& o : obligations)
        if (!isSatisfiable(o, schema, options)) return {};

    std::vector<ContainmentFailure> failures;
    for (std::size_t j = 0; j < provider.obligations().size(); ++j) {
        const auto& target = provider.obligations()[j];
        bool agreed = false;
        for (const auto& o : obligations)
            if (ruleContains(o, target, schema, options)) {
                agreed = true;
                break;
            }
        if (agreed) continue;
        std::vector<Event> events;
        for (const auto& o : obligations) events.push_back(*containmentCounterexample(o, target, schema, options));
        failures.push_back({direction, ConflictCause::ObligationNotAgreed,
                            {displayName(target, "obligation[" + std::to_string(j) + "]")}, World(std::move(events))});
    }

    if (auto extra = ruleSetCounterexample(requester.permissions(), provider.permissions(), schema, options)) {
        std::vector<Event> events;
        for (const auto& o : obligations) events.push_back(*overlapWitness(o, o, schema, options));
        std::vector<std::string> names;
        for (const auto& p : requester.permissions())
            if (matchUnchecked(p, *extra, schema)) {
                names.push_back(nameOf(requester.permissions(), p, "permission"));
                break;
            }
        events.push_back(*extra);
        failures.push_back(
            {direction, ConflictCause::PermissionsNotContained, std::move(names), World(std::move(events))});
    }
    return failures;
}

}// namespace

std::string_view toString(ConflictKind k) { return k == ConflictKind::Symmetric ? "symmetric" : "asymmetric"; }

std::string_view toString(ConflictCause c) {
    return c == ConflictCause::PermissionsNotContained ? "permissions-not-contained" : "obligation-not-agreed";
}

std::string_view toString(Direction d) { return d == Direction::LeftInRight ? "left-in-right" : "right-in-left"; }

ConflictVerdict asymmetricConflict(const LitePolicy& requester, const LitePolicy& provider, const FeatureSchema& schema,
                                   const CompareOptions& options) {
    const auto r = prepare(requester, schema, options, "requester");
    const auto p = prepare(provider, schema, options, "provider");
    return {ConflictKind::Asymmetric, failuresOf(r, p, schema, options, Direction::LeftInRight)};
}

ConflictVerdict symmetricConflict(const LitePolicy& left, const LitePolicy& right, const FeatureSchema& schema,
                                  const CompareOptions& options) {
    const auto l = prepare(left, schema, options, "left");
    const auto r = prepare(right, schema, options, "right");
    ConflictVerdict verdict{ConflictKind::Symmetric, failuresOf(l, r, schema, options, Direction::LeftInRight)};
    for (auto& f : failuresOf(r, l, schema, options, Direction::RightInLeft)) verdict.failures.push_back(std::move(f));
    return verdict;
}

}// namespace odrl
