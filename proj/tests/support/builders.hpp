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

#include <odrl/model.hpp>

#include <optional>
#include <string>

namespace odrl::test {

// Feature indices of the sample schema.
inline constexpr FeatureId kDatetime = 0;
inline constexpr FeatureId kAction = 1;
inline constexpr FeatureId kActor = 2;
inline constexpr FeatureId kAsset = 3;
inline constexpr FeatureId kResolution = 4;
inline constexpr FeatureId kPages = 5;
// Extra features of the extended schema.
inline constexpr FeatureId kTags = 6;
inline constexpr FeatureId kLocation = 7;
inline constexpr FeatureId kRegions = 8;
inline constexpr FeatureId kNote = 9;

/// Datetime, Action, Actor, Asset, Print.Resolution (refines Action), Book.Pages (refines Asset).
FeatureSchema sampleSchema();

/// The sample schema plus Asset.Tags (identifier set refining Asset), Location (rule-wide
/// identifier whose classes come from the per-event Location.Regions set) and
/// Note (rule-wide string).
FeatureSchema extendedSchema();

/// The three events of the sample world.
World sampleWorld();

Event event(std::int64_t t, const std::string& action, const std::string& actor, const std::string& asset,
            std::optional<double> resolution = std::nullopt, std::optional<double> pages = std::nullopt);

inline SimpleCondition cond(FeatureId f, Operator op, Value v) { return SimpleCondition(f, op, std::move(v)); }
inline SimpleCondition eq(FeatureId f, const std::string& atom) { return SimpleCondition(f, Operator::Eq, id(atom)); }

/// <Actor,=,actor> ∧ <Action,=,action> ∧ <Asset,=,asset>; empty strings leave the component open.
std::vector<Condition> core(const std::string& actor, const std::string& action, const std::string& asset);
EventRule rule(std::vector<Condition> conditions, std::string label = {});
EventRule rule(const std::string& actor, const std::string& action, const std::string& asset,
               std::vector<Condition> extra = {}, std::string label = {});

/// The sample policy's rules p1, f1 and o1.
EventRule samplePermission();
EventRule sampleProhibition();
EventRule sampleObligation();
LitePolicy samplePolicy();

/// Absolute path of a file in tests/fixtures.
std::string fixture(const std::string& name);

}// namespace odrl::test
