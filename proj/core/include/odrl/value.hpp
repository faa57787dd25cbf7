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

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <variant>

namespace odrl {

/// Unspecified feature value. Every simple condition on a null feature is false.
struct Null {
    friend bool operator==(Null, Null) = default;
    friend std::strong_ordering operator<=>(Null, Null) = default;
};

/// Totally ordered integer ticks.
struct Timestamp {
    std::int64_t ticks = 0;
    friend bool operator==(Timestamp, Timestamp) = default;
    friend std::strong_ordering operator<=>(Timestamp, Timestamp) = default;
};

/// Finite real number. Integers and decimals share this representation so that
/// numeric equality is value equality.
struct Number {
    double value = 0.0;

    Number() = default;
    explicit Number(double v);

    friend bool operator==(Number a, Number b) { return a.value == b.value; }
    friend std::strong_ordering operator<=>(Number a, Number b) {
        if (a.value < b.value) return std::strong_ordering::less;
        if (b.value < a.value) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

/// Free text; ordered lexicographically by bytes.
struct Text {
    std::string value;
    friend bool operator==(const Text&, const Text&) = default;
    friend std::strong_ordering operator<=>(const Text&, const Text&) = default;
};

/// Opaque atom (party, asset, action, class). Only equality is defined.
struct Identifier {
    std::string value;
    friend bool operator==(const Identifier&, const Identifier&) = default;
    friend std::strong_ordering operator<=>(const Identifier&, const Identifier&) = default;
};

/// Finite deduplicated set of identifiers.
struct IdentifierSet {
    std::set<std::string> members;
    friend bool operator==(const IdentifierSet&, const IdentifierSet&) = default;
    friend std::strong_ordering operator<=>(const IdentifierSet&, const IdentifierSet&) = default;
};

using Value = std::variant<Null, Timestamp, Number, Text, Identifier, IdentifierSet>;

enum class ValueKind { Null, Timestamp, Number, Text, Identifier, IdentifierSet };

inline ValueKind kindOf(const Value& v) { return static_cast<ValueKind>(v.index()); }
inline bool isNull(const Value& v) { return std::holds_alternative<Null>(v); }

inline Value ts(std::int64_t ticks) { return Timestamp{ticks}; }
inline Value num(double v) { return Number{v}; }
inline Value text(std::string v) { return Text{std::move(v)}; }
inline Value id(std::string v) { return Identifier{std::move(v)}; }
inline Value idset(std::set<std::string> members) { return IdentifierSet{std::move(members)}; }

/// Human readable rendering, used in diagnostics.
std::string toString(const Value& v);

/// Shortest decimal representation that round-trips.
std::string formatNumber(double v);

}// namespace odrl
