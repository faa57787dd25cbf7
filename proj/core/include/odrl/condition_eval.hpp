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

#include <odrl/condition.hpp>
#include <odrl/event.hpp>
#include <odrl/schema.hpp>

namespace odrl {

// Two-valued condition evaluation. Null feature values, incomparable types and
// unknown features all evaluate to false; nothing here throws.

bool evalSimple(const SimpleCondition& c, const Event& e, const FeatureSchema& schema);
bool evalComplex(const Condition& c, const Event& e, const FeatureSchema& schema);

/// Value comparison `left op right` for every operator except isA.
bool compareOperand(Operator op, const Value& left, const SimpleCondition& c);

/// Evaluates a condition whose leaves all reference `feature` on that feature's
/// value alone. Only valid when no leaf is an isA backed by a per-event class
/// feature (see `dependsOnSingleFeature`).
bool evalOnValue(const Condition& c, const Value& value, const FeatureSchema& schema);

/// True when the condition's truth is a function of one feature's value.
bool dependsOnSingleFeature(const Condition& c, const FeatureSchema& schema);

/// Rewrites every Xor node as Or(And(a, Not b), And(Not a, b)).
Condition desugarXor(const Condition& c);

/// The xor-with-top encoding of negation, where top is <i,=,x> or <i,!=,x>.
/// Agrees with Not(c) on events where feature i is non-null.
Condition negateViaXor(const Condition& c, FeatureId i, const Value& x);

}// namespace odrl
