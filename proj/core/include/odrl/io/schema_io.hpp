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

#include <odrl/schema.hpp>
#include <odrl/value.hpp>
#include <odrl/vocabulary.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace odrl::io {

inline constexpr std::string_view kSchemaFormat = "odrl-schema/1";
inline constexpr std::string_view kVocabularyFormat = "odrl-vocabulary/1";

/// JSON schema document:
///   {"format": "odrl-schema/1",
///    "features": [{"id": 0, "name": "Datetime", "datatype": "timestamp", "component": "rule"}, ...]}
/// `component` is "rule", "self", or the name of the refined feature. Optional
/// keys: "role", "leftOperand", "classes", "classFeature". Unknown keys are rejected.
FeatureSchema parseSchema(std::string_view json);
std::string serializeSchema(const FeatureSchema& schema);

/// {"format": "odrl-vocabulary/1", "includedIn": [["Display", "Play"], ...]}
ActionVocabulary parseVocabulary(std::string_view json);
std::string serializeVocabulary(const ActionVocabulary& vocabulary);

/// Integer ticks, or ISO-8601 ("2024-05-01", "2024-05-01T10:00:00Z",
/// "2024-05-01T10:00:00+02:00") mapped to seconds since the Unix epoch.
std::optional<std::int64_t> parseTimestamp(std::string_view text);

/// Parses a textual scalar as a value of datatype `d`; "null" is Null and
/// identifier sets are '|'-separated. Returns nullopt when unparsable.
std::optional<Value> parseValueText(std::string_view text, Datatype d);
std::string formatValueText(const Value& v);

std::string readFile(const std::string& path);

}// namespace odrl::io
