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

#include <odrl/evaluator.hpp>

#include <map>

namespace odrl {

namespace {

using Signature = std::vector<bool>;

/// Calls f on every index subset of {0..n-1} with at most k elements, smallest first.
template<typename F>
bool forEachSubset(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> pick;
    for (std::size_t size = 0; size <= std::min(n, k); ++size) {
        pick.resize(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            if (!f(pick)) return false;
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return true;
}

bool allowedBy(const LitePolicy& p, const Event& e, const FeatureSchema& schema) {
    bool permitted = false;
    for (const auto& r : p.permissions())
        if (matchUnchecked(r, e, schema)) {
            permitted = true;
            break;
        }
    if (!permitted) return false;
    for (const auto& r : p.prohibitions())
        if (matchUnchecked(r, e, schema)) return false;
    return true;
}

/// Representative events, one per distinct key, in enumeration order.
template<typename Key>
std::vector<Event> representatives(const WitnessDomain& domain, const LitePolicy& p, const CompareOptions& options,
                                   Key&& key) {
    if (domain.productSize() > options.maxProbeEvents)
        throw ComparisonError("domain-too-large", "probe product of " + std::to_string(domain.productSize()) +
                                                      " events exceeds " + std::to_string(options.maxProbeEvents));
    std::map<decltype(key(std::declval<const Event&>())), std::size_t> seen;
    std::vector<Event> reps;
    domain.forEach([&](const Event& e) {
        if (!allowedBy(p, e, domain.schema())) return true;
        if (seen.emplace(key(e), reps.size()).second) reps.push_back(e);
        return true;
    });
    return reps;
}

template<typename Violated>
OracleResult search(const std::vector<Event>& reps, std::size_t maxSize, const CompareOptions& options,
                    Violated&& violatedPQ) {
    OracleResult result;
    std::vector<const Event*> world;
    forEachSubset(reps.size(), maxSize, [&](const std::vector<std::size_t>& pick) {
        if (++result.worldsChecked > options.maxWorlds)
            throw ComparisonError("domain-too-large",
                                  "more than " + std::to_string(options.maxWorlds) + " candidate worlds");
        world.clear();
        for (auto i : pick) world.push_back(&reps[i]);
        if (!violatedPQ.first(world) && violatedPQ.second(world)) {
            std::vector<Event> events;
            for (const auto* e : world) events.push_back(*e);
            result.contained = false;
            result.counterexample = World(std::move(events));
            return false;
        }
        return true;
    });
    return result;
}

std::vector<const EventRule*> concat(std::vector<const EventRule*> a, const std::vector<const EventRule*>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}// namespace

OracleResult bruteForceContainment(const LitePolicy& p, const LitePolicy& q, const FeatureSchema& schema,
                                   const CompareOptions& options) {
    const auto rules = concat(p.allRules(), q.allRules());
    for (const auto* r : rules) requireWellFormed(*r, schema);
    WitnessDomain domain(schema, rules, internal::domainOptions(options));
    auto reps = representatives(domain, p, options, [&](const Event& e) {
        Signature s;
        s.reserve(rules.size());
        for (const auto* r : rules) s.push_back(matchUnchecked(*r, e, schema));
        return s;
    });
    auto violated = std::make_pair(
        [&](std::span<const Event* const> w) { return detail::liteViolated(p, w, schema); },
        [&](std::span<const Event* const> w) { return detail::liteViolated(q, w, schema); });
    return search(reps, p.obligations().size() + 1, options, violated);
}

OracleResult bruteForceContainment(const FullPolicy& p, const FullPolicy& q, const FeatureSchema& schema,
                                   const CompareOptions& options, std::optional<std::size_t> maxWorldSize) {
    const auto rules = concat(p.allRules(), q.allRules());
    for (const auto* r : rules) requireWellFormed(*r, schema);
    std::vector<EventRule> soft;
    for (const auto* policy : {&p, &q})
        for (const auto& t : policy->obligationConsequences()) soft.push_back(withoutDeadlines(t.obligation));
    WitnessDomain domain(schema, rules, internal::domainOptions(options, true));
    auto reps = representatives(domain, p.lite(), options, [&](const Event& e) {
        Signature s;
        for (const auto* r : rules) s.push_back(matchUnchecked(*r, e, schema));
        for (const auto& r : soft) s.push_back(matchUnchecked(r, e, schema));
        return std::make_pair(std::move(s), e.timestamp());
    });
    const std::size_t size = maxWorldSize.value_or(p.lite().obligations().size() + p.duties().size() +
                                                   p.dutiesWithConsequence().size() + p.remedies().size() +
                                                   p.obligationConsequences().size() + 1);
    auto violated = std::make_pair(
        [&](std::span<const Event* const> w) { return detail::fullViolated(p, w, schema); },
        [&](std::span<const Event* const> w) { return detail::fullViolated(q, w, schema); });
    return search(reps, size, options, violated);
}

}// namespace odrl
