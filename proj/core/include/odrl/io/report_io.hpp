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
#include <odrl/evaluator.hpp>
#include <odrl/matcher.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace odrl::io {

inline constexpr std::string_view kReportFormat = "odrl-report/1";
inline constexpr std::string_view kVerdictFormat = "odrl-verdict/1";
inline constexpr std::string_view kCheckFormat = "odrl-check/1";
inline constexpr std::string_view kErrorFormat = "odrl-error/1";

std::string reportToJson(const ViolationReport& report, const FeatureSchema& schema);
std::string verdictToJson(const ConflictVerdict& verdict, const FeatureSchema& schema);
std::string wellFormednessToJson(const std::vector<WellFormednessReport>& reports, const FeatureSchema& schema);
std::string errorToJson(const Error& error);
std::string errorToJson(std::string_view code, std::string_view message);

/// {"Datetime": 1, "Action": "Print", ...}
std::string eventToJson(const Event& e, const FeatureSchema& schema);

}// namespace odrl::io
