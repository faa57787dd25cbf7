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

#include <optional>
#include <stdexcept>
#include <string>

namespace odrl {

/// Base of every error raised by the library. `code()` is a stable kebab-case
/// identifier (e.g. "ill-formed-rule") suitable for machine consumption.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& message) : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

/// duplicate-index, missing-index, bad-gamma-target, wrong-datetime-slot, duplicate-role,
/// wrong-action-slot, duplicate-name, bad-class-feature, unknown-feature.
class SchemaError : public Error {
    using Error::Error;
};

/// ill-formed-rule, policy-invariant-violation, schema-mismatch, cyclic-vocabulary,
/// invalid-condition, invalid-event.
class PolicyError : public Error {
    using Error::Error;
};

/// normalization-blowup, domain-too-large, inconsistent-input.
class ComparisonError : public Error {
    using Error::Error;
};

/// column-collision, unsupported-operator.
class EmitError : public Error {
    using Error::Error;
};

/// Raised by document readers. Carries optional row/column coordinates for tabular input.
class ParseError : public Error {
  public:
    ParseError(std::string code, const std::string& message,
               std::optional<std::size_t> row = std::nullopt,
               std::optional<std::string> column = std::nullopt)
        : Error(std::move(code), message), row_(row), column_(std::move(column)) {}

    const std::optional<std::size_t>& row() const noexcept { return row_; }
    const std::optional<std::string>& column() const noexcept { return column_; }

  private:
    std::optional<std::size_t> row_;
    std::optional<std::string> column_;
};

}// namespace odrl
