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

#include <odrl/condition.hpp>
#include <odrl/error.hpp>

#include <array>

namespace odrl {

namespace {

constexpr std::array<std::pair<Operator, std::string_view>, 12> kOperatorNames{{
    {Operator::Eq, "eq"},
    {Operator::Gt, "gt"},
    {Operator::Gteq, "gteq"},
    {Operator::Lt, "lt"},
    {Operator::Lteq, "lteq"},
    {Operator::Neq, "neq"},
    {Operator::IsA, "isA"},
    {Operator::HasPart, "hasPart"},
    {Operator::IsPartOf, "isPartOf"},
    {Operator::IsAllOf, "isAllOf"},
    {Operator::IsAnyOf, "isAnyOf"},
    {Operator::IsNoneOf, "isNoneOf"},
}};

constexpr std::string_view kOdrlPrefix = "odrl:";
constexpr std::string_view kOdrlNamespace = "http://www.w3.org/ns/odrl/2/";

}// namespace

std::string_view toString(Operator op) {
    for (auto [k, n] : kOperatorNames)
        if (k == op) return n;
    return "?";
}

std::optional<Operator> operatorFromString(std::string_view s) {
    if (s.starts_with(kOdrlPrefix)) s.remove_prefix(kOdrlPrefix.size());
    else if (s.starts_with(kOdrlNamespace)) s.remove_prefix(kOdrlNamespace.size());
    for (auto [k, n] : kOperatorNames)
        if (n == s) return k;
    if (s == "rdf:type") return Operator::IsA;
    return std::nullopt;
}

bool isSetOperator(Operator op) {
    switch (op) {
        case Operator::HasPart:
        case Operator::IsPartOf:
        case Operator::IsAllOf:
        case Operator::IsAnyOf:
        case Operator::IsNoneOf: return true;
        default: return false;
    }
}

SimpleCondition::SimpleCondition(FeatureId feature, Operator op, Value value) : feature_(feature), op_(op) {
    if (isSetOperator(op)) operand_ = ValueSet{std::move(value)};
    else
        operand_ = std::move(value);
}

SimpleCondition::SimpleCondition(FeatureId feature, Operator op, ValueSet values) : feature_(feature), op_(op) {
    if (!isSetOperator(op))
        throw PolicyError("invalid-condition",
                          "operator '" + std::string(toString(op)) + "' takes a single value, not a set");
    for (const auto& v : values)
        if (isNull(v)) throw PolicyError("invalid-condition", "null cannot be a member of a set operand");
    operand_ = std::move(values);
}

std::strong_ordering operator<=>(const SimpleCondition& a, const SimpleCondition& b) {
    if (auto c = a.feature_ <=> b.feature_; c != 0) return c;
    if (auto c = a.op_ <=> b.op_; c != 0) return c;
    if (auto c = a.operand_.index() <=> b.operand_.index(); c != 0) return c;
    if (a.hasSetOperand()) {
        return std::lexicographical_compare_three_way(a.values().begin(), a.values().end(), b.values().begin(),
                                                      b.values().end());
    }
    return a.value() <=> b.value();
}

Condition::Condition(SimpleCondition leaf) : kind_(Kind::Simple), leaf_(std::move(leaf)) {}

Condition::Condition(Kind kind, std::vector<Condition> operands) : kind_(kind), operands_(std::move(operands)) {}

Condition Condition::conjunction(std::vector<Condition> operands) { return Condition(Kind::And, std::move(operands)); }
Condition Condition::disjunction(std::vector<Condition> operands) { return Condition(Kind::Or, std::move(operands)); }

Condition Condition::negation(Condition operand) {
    std::vector<Condition> v;
    v.push_back(std::move(operand));
    return Condition(Kind::Not, std::move(v));
}

Condition Condition::exclusiveOr(Condition lhs, Condition rhs) {
    std::vector<Condition> v;
    v.push_back(std::move(lhs));
    v.push_back(std::move(rhs));
    return Condition(Kind::Xor, std::move(v));
}

std::set<FeatureId> Condition::features() const {
    std::set<FeatureId> out;
    forEachSimple([&](const SimpleCondition& s) { out.insert(s.feature()); });
    return out;
}

bool operator==(const Condition& a, const Condition& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Condition& a, const Condition& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (a.kind_ == Condition::Kind::Simple) return *a.leaf_ <=> *b.leaf_;
    return std::lexicographical_compare_three_way(a.operands_.begin(), a.operands_.end(), b.operands_.begin(),
                                                  b.operands_.end());
}

}// namespace odrl
