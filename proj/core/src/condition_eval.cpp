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

#include <odrl/condition_eval.hpp>

namespace odrl {

namespace {

/// Outcome of comparing two scalars of the same kind. `ordered` is false for
/// kinds supporting equality only.
struct Comparison {
    bool ordered;
    int sign;
};

template<typename T>
int signOf(const T& a, const T& b) {
    return a < b ? -1 : (b < a ? 1 : 0);
}

std::optional<Comparison> compareScalars(const Value& a, const Value& b) {
    if (isNull(a) || isNull(b) || a.index() != b.index()) return std::nullopt;
    switch (kindOf(a)) {
        case ValueKind::Timestamp: return Comparison{true, signOf(std::get<Timestamp>(a), std::get<Timestamp>(b))};
        case ValueKind::Number: return Comparison{true, signOf(std::get<Number>(a), std::get<Number>(b))};
        case ValueKind::Text: return Comparison{true, signOf(std::get<Text>(a), std::get<Text>(b))};
        case ValueKind::Identifier:
        case ValueKind::IdentifierSet: return Comparison{false, a == b ? 0 : 1};
        case ValueKind::Null: break;
    }
    return std::nullopt;
}

bool scalarTest(Operator op, const Value& left, const Value& right) {
    const auto c = compareScalars(left, right);
    if (!c) return false;
    switch (op) {
        case Operator::Eq: return c->sign == 0;
        case Operator::Neq: return c->sign != 0;
        case Operator::Lt: return c->ordered && c->sign < 0;
        case Operator::Lteq: return c->ordered && c->sign <= 0;
        case Operator::Gt: return c->ordered && c->sign > 0;
        case Operator::Gteq: return c->ordered && c->sign >= 0;
        default: return false;
    }
}

bool setTest(Operator op, const Value& left, const ValueSet& right) {
    if (isNull(left)) return false;
    ValueSet lhs;
    ValueKind memberKind = kindOf(left);
    if (const auto* s = std::get_if<IdentifierSet>(&left)) {
        memberKind = ValueKind::Identifier;
        for (const auto& m : s->members) lhs.insert(Identifier{m});
    } else {
        lhs.insert(left);
    }
    for (const auto& v : right)
        if (kindOf(v) != memberKind) return false;

    auto subset = [](const ValueSet& a, const ValueSet& b) {
        for (const auto& x : a)
            if (!b.contains(x)) return false;
        return true;
    };
    auto intersects = [](const ValueSet& a, const ValueSet& b) {
        for (const auto& x : a)
            if (b.contains(x)) return true;
        return false;
    };
    switch (op) {
        case Operator::HasPart: return subset(right, lhs);
        case Operator::IsPartOf: return subset(lhs, right);
        case Operator::IsAllOf: return lhs == right;
        case Operator::IsAnyOf: return intersects(lhs, right);
        case Operator::IsNoneOf: return !intersects(lhs, right);
        default: return false;
    }
}

bool classSetContains(const SimpleCondition& c, const Value& left, const Event* e, const FeatureSchema& schema) {
    if (isNull(left) || !schema.contains(c.feature())) return false;
    const auto* wanted = std::get_if<Identifier>(&c.value());
    if (!wanted) return false;
    const auto& decl = schema.feature(c.feature());
    if (decl.classFeature) {
        if (!e || *decl.classFeature >= e->size()) return false;
        const auto* classes = std::get_if<IdentifierSet>(&(*e)[*decl.classFeature]);
        return classes && classes->members.contains(wanted->value);
    }
    return decl.classes.contains(wanted->value);
}

bool evalLeaf(const SimpleCondition& c, const Value& left, const Event* e, const FeatureSchema& schema) {
    if (c.op() == Operator::IsA) return classSetContains(c, left, e, schema);
    return compareOperand(c.op(), left, c);
}

template<typename Leaf>
bool evalTree(const Condition& c, const Leaf& leaf) {
    switch (c.kind()) {
        case Condition::Kind::Simple: return leaf(c.simple());
        case Condition::Kind::And:
            for (const auto& o : c.operands())
                if (!evalTree(o, leaf)) return false;
            return true;
        case Condition::Kind::Or:
            for (const auto& o : c.operands())
                if (evalTree(o, leaf)) return true;
            return false;
        case Condition::Kind::Not: return !evalTree(c.operands().front(), leaf);
        case Condition::Kind::Xor: return evalTree(c.operands()[0], leaf) != evalTree(c.operands()[1], leaf);
    }
    return false;
}

}// namespace

bool compareOperand(Operator op, const Value& left, const SimpleCondition& c) {
    if (c.hasSetOperand()) return setTest(op, left, c.values());
    return scalarTest(op, left, c.value());
}

bool evalSimple(const SimpleCondition& c, const Event& e, const FeatureSchema& schema) {
    if (c.feature() >= e.size()) return false;
    return evalLeaf(c, e[c.feature()], &e, schema);
}

bool evalComplex(const Condition& c, const Event& e, const FeatureSchema& schema) {
    return evalTree(c, [&](const SimpleCondition& s) { return evalSimple(s, e, schema); });
}

bool evalOnValue(const Condition& c, const Value& value, const FeatureSchema& schema) {
    return evalTree(c, [&](const SimpleCondition& s) { return evalLeaf(s, value, nullptr, schema); });
}

bool dependsOnSingleFeature(const Condition& c, const FeatureSchema& schema) {
    std::optional<FeatureId> only;
    bool single = true;
    c.forEachSimple([&](const SimpleCondition& s) {
        if (only && *only != s.feature()) single = false;
        only = s.feature();
        if (s.op() == Operator::IsA && (!schema.contains(s.feature()) || schema.feature(s.feature()).classFeature))
            single = false;
    });
    return single && only.has_value();
}

Condition desugarXor(const Condition& c) {
    switch (c.kind()) {
        case Condition::Kind::Simple: return c;
        case Condition::Kind::Xor: {
            auto a = desugarXor(c.operands()[0]);
            auto b = desugarXor(c.operands()[1]);
            return Condition::disjunction({Condition::conjunction({a, Condition::negation(b)}),
                                           Condition::conjunction({Condition::negation(a), b})});
        }
        case Condition::Kind::Not: return Condition::negation(desugarXor(c.operands().front()));
        case Condition::Kind::And:
        case Condition::Kind::Or: {
            std::vector<Condition> ops;
            ops.reserve(c.operands().size());
            for (const auto& o : c.operands()) ops.push_back(desugarXor(o));
            return c.kind() == Condition::Kind::And ? Condition::conjunction(std::move(ops))
                                                    : Condition::disjunction(std::move(ops));
        }
    }
    return c;
}

Condition negateViaXor(const Condition& c, FeatureId i, const Value& x) {
    auto top = Condition::disjunction({SimpleCondition(i, Operator::Eq, x), SimpleCondition(i, Operator::Neq, x)});
    return Condition::exclusiveOr(c, std::move(top));
}

}// namespace odrl
