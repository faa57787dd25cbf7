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

#include <compare>
#include <optional>
#include <set>
#include <string_view>
#include <variant>
#include <vector>

namespace odrl {

/// The twelve supported ODRL comparison operators.
enum class Operator { Eq, Gt, Gteq, Lt, Lteq, Neq, IsA, HasPart, IsPartOf, IsAllOf, IsAnyOf, IsNoneOf };

/// ODRL term ("eq", "lteq", "isAnyOf", ...).
std::string_view toString(Operator op);
/// Accepts the bare term, the "odrl:" compact form and the full ODRL IRI.
std::optional<Operator> operatorFromString(std::string_view s);

/// hasPart, isPartOf, isAllOf, isAnyOf, isNoneOf.
bool isSetOperator(Operator op);

using ValueSet = std::set<Value>;

/// <i, op, v>. Set operators always carry a ValueSet (a scalar operand is
/// stored as the singleton set); every other operator carries a scalar Value.
class SimpleCondition {
  public:
    SimpleCondition(FeatureId feature, Operator op, Value value);
    SimpleCondition(FeatureId feature, Operator op, ValueSet values);

    FeatureId feature() const { return feature_; }
    Operator op() const { return op_; }
    bool hasSetOperand() const { return std::holds_alternative<ValueSet>(operand_); }
    const Value& value() const { return std::get<Value>(operand_); }
    const ValueSet& values() const { return std::get<ValueSet>(operand_); }

    friend bool operator==(const SimpleCondition&, const SimpleCondition&) = default;
    friend std::strong_ordering operator<=>(const SimpleCondition&, const SimpleCondition&);

  private:
    FeatureId feature_;
    Operator op_;
    std::variant<Value, ValueSet> operand_;
};

/// A simple condition or a boolean combination of conditions.
class Condition {
  public:
    enum class Kind { Simple, And, Or, Not, Xor };

    Condition(SimpleCondition leaf);// NOLINT(google-explicit-constructor)

    static Condition conjunction(std::vector<Condition> operands);
    static Condition disjunction(std::vector<Condition> operands);
    static Condition negation(Condition operand);
    static Condition exclusiveOr(Condition lhs, Condition rhs);
    /// Empty conjunction.
    static Condition alwaysTrue() { return conjunction({}); }

    Kind kind() const { return kind_; }
    bool isSimple() const { return kind_ == Kind::Simple; }
    const SimpleCondition& simple() const { return *leaf_; }
    const std::vector<Condition>& operands() const { return operands_; }

    /// I_C: features referenced by any leaf.
    std::set<FeatureId> features() const;

    template<typename F>
    void forEachSimple(F&& f) const {
        if (isSimple()) {
            f(*leaf_);
            return;
        }
        for (const auto& c : operands_) c.forEachSimple(f);
    }

    friend bool operator==(const Condition& a, const Condition& b);
    friend std::strong_ordering operator<=>(const Condition& a, const Condition& b);

  private:
    Condition(Kind kind, std::vector<Condition> operands);

    Kind kind_;
    std::optional<SimpleCondition> leaf_;
    std::vector<Condition> operands_;
};

inline Condition operator&&(Condition a, Condition b) { return Condition::conjunction({std::move(a), std::move(b)}); }
inline Condition operator||(Condition a, Condition b) { return Condition::disjunction({std::move(a), std::move(b)}); }
inline Condition operator!(Condition a) { return Condition::negation(std::move(a)); }

}// namespace odrl
