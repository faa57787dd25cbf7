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

#include <odrl/event.hpp>
#include <odrl/rule.hpp>
#include <odrl/schema.hpp>

#include <string>
#include <span>
#include <string_view>
#include <vector>

namespace odrl {

enum class Clause {
    Permissions,
    Prohibitions,
    Obligations,
    PermissionDuties,
    PermissionDutiesWithConsequences,
    ProhibitionRemedies,
    ObligationConsequences,
};

std::string_view toString(Clause c);

/// One reason a world violates a policy.
struct Finding {
    Clause clause = Clause::Permissions;
    /// Names of the rules involved (label, or a positional name such as "permission[0]").
    std::vector<std::string> rules;
    /// Events witnessing an existential clause; members of the evaluated world.
    std::vector<Event> witnesses;
    /// For universally quantified clauses: what the world is missing.
    std::string missing;
};

/// Evidence that an obligation is fulfilled.
struct Fulfillment {
    std::string rule;
    std::vector<Event> witnesses;
};

struct ViolationReport {
    /// Ordered by clause, then rule name, then witness timestamp.
    std::vector<Finding> findings;
    std::vector<Fulfillment> fulfilled;

    bool valid() const { return findings.empty(); }
    std::vector<const Finding*> of(Clause c) const;
};

/// Throws PolicyError "schema-mismatch" / "ill-formed-rule".
ViolationReport evaluateLite(const LitePolicy& policy, const World& world, const FeatureSchema& schema);
ViolationReport evaluateFull(const FullPolicy& policy, const World& world, const FeatureSchema& schema);

/// Short-circuiting validity checks.
bool isValid(const LitePolicy& policy, const World& world, const FeatureSchema& schema);
bool isValid(const FullPolicy& policy, const World& world, const FeatureSchema& schema);

namespace detail {
// Unchecked variants for callers that validated rules and events up front.
bool liteViolated(const LitePolicy& policy, std::span<const Event* const> world, const FeatureSchema& schema);
bool fullViolated(const FullPolicy& policy, std::span<const Event* const> world, const FeatureSchema& schema);
}// namespace detail

}// namespace odrl
