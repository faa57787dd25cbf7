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

#pragma once

#include <odrl/comparator.hpp>
#include <odrl/error.hpp>
#include <odrl/matcher.hpp>

#include <optional>
#include <vector>

namespace odrl::internal {

using ProbeLists = std::vector<std::vector<Value>>;

/// Keeps in `into` only the probes also present in `other`, feature by feature.
inline void intersect(ProbeLists& into, const ProbeLists& other) {
    for (std::size_t f = 0; f < into.size(); ++f) {
        auto& l = into[f];
        std::erase_if(l, [&](const Value& v) { return std::find(other[f].begin(), other[f].end(), v) == other[f].end(); });
    }
}

inline void requireWithinBudget(const ProbeLists& lists, const CompareOptions& options) {
    const auto n = WitnessDomain::productSize(lists);
    if (n > options.maxProbeEvents)
        throw ComparisonError("domain-too-large", "probe product of " + std::to_string(n) + " events exceeds " +
                                                      std::to_string(options.maxProbeEvents));
}

inline WitnessDomainOptions domainOptions(const CompareOptions& options, bool temporal = false) {
    return WitnessDomainOptions{temporal, options.maxSetUniverse};
}

/// First product event matching every rule in `all` and none in `none`.
std::optional<Event> findEvent(const WitnessDomain& domain, const std::vector<const EventRule*>& all,
                               const std::vector<const EventRule*>& none, const CompareOptions& options);

/// Conjunction of two rules; nullopt when they fix a core component differently.
std::optional<EventRule> conjoin(const EventRule& a, const EventRule& b, const FeatureSchema& schema);

}// namespace odrl::internal
