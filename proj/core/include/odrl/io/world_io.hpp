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
#include <odrl/schema.hpp>

#include <string>
#include <string_view>

namespace odrl::io {

/// Delimiter-separated event log: a header row naming every schema feature
/// once (any order), one row per event, the literal "null" for unspecified
/// values, '|' between set members. Fields may be double-quoted. Duplicate
/// rows collapse. Errors: header-mismatch, arity-mismatch, unparsable-value.
World parseWorld(std::string_view text, const FeatureSchema& schema, char delimiter = ',');
std::string serializeWorld(const World& world, const FeatureSchema& schema, char delimiter = ',');

}// namespace odrl::io
