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

#include <odrl/rule.hpp>
#include <odrl/schema.hpp>

#include <string>
#include <string_view>

namespace odrl::io {

inline constexpr std::string_view kNativePolicyFormat = "odrl-native/1";

struct PolicyParseOptions {
    /// Reject ill-formed rules after parsing ("ill-formed-rule").
    bool enforceWellFormed = true;
};

/// Accepts either document kind:
///  - the canonical native document (top-level "format": "odrl-native/1");
///  - an ODRL 2.2 JSON-LD document in compacted form with the standard ODRL
///    context (top-level "@context").
/// Errors: unknown-left-operand, unsupported-operator, ill-formed-rule,
/// dangling-duty, malformed-document, policy-invariant-violation.
FullPolicy parsePolicy(std::string_view document, const FeatureSchema& schema, PolicyParseOptions options = {});

/// Canonical native document. parsePolicy(serializePolicy(p)) == p.
std::string serializePolicy(const FullPolicy& policy, const FeatureSchema& schema);
std::string serializePolicy(const LitePolicy& policy, const FeatureSchema& schema);

}// namespace odrl::io
