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
#include <vector>

namespace odrl {

struct WellFormednessViolation {
    std::string rule;
    /// 1: action equality, 2: core component usage, 3: single-component
    /// complex condition, 0: reference to an undeclared feature.
    int item = 0;
    std::vector<FeatureId> features;
    std::string detail;
};

struct WellFormednessReport {
    std::vector<WellFormednessViolation> violations;
    bool ok() const { return violations.empty(); }
};

WellFormednessReport checkWellFormed(const EventRule& rule, const FeatureSchema& schema,
                                     const std::string& name = {});

/// Throws PolicyError "ill-formed-rule" carrying the first violation.
void requireWellFormed(const EventRule& rule, const FeatureSchema& schema, const std::string& name = {});

/// Conjunction of all conditions on `e`. Throws on an ill-formed rule.
bool match(const EventRule& rule, const Event& e, const FeatureSchema& schema);

/// match() with every <Datetime, <=, t> constraint relaxed (see withoutDeadlines).
bool softmatch(const EventRule& rule, const Event& e, const FeatureSchema& schema);

/// Same as match() without the well-formedness check; callers validate once.
bool matchUnchecked(const EventRule& rule, const Event& e, const FeatureSchema& schema);

/// The rule with every <Datetime, <=, t> leaf relaxed: dropped when top-level,
/// replaced by true in positive positions and by false under negation (xor
/// nodes containing such a leaf are expanded first), so match implies softmatch.
EventRule withoutDeadlines(const EventRule& rule);

}// namespace odrl
