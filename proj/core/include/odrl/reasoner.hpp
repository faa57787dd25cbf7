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
#include <odrl/vocabulary.hpp>

namespace odrl {

/// Permission-only, reflexive-transitive materialisation of the action hierarchy.
struct SaturationConfig {
    bool enabled = true;
};

/// Adds, for every permission on action a and every a' included (transitively)
/// in a, a copy of the permission on a'. Duty tuples follow their permission
/// copies. Prohibitions, obligations and duty/remedy/consequence rules are untouched.
LitePolicy saturate(const LitePolicy& policy, const ActionVocabulary& vocabulary, SaturationConfig config = {});
FullPolicy saturate(const FullPolicy& policy, const ActionVocabulary& vocabulary, SaturationConfig config = {});

}// namespace odrl
