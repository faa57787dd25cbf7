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

#include <odrl/error.hpp>
#include <odrl/event.hpp>

#include <algorithm>

namespace odrl {

Event::Event(std::vector<Value> values) : values_(std::move(values)) {
    if (values_.size() < 2) throw PolicyError("invalid-event", "an event needs at least a timestamp and an action");
    if (!std::holds_alternative<Timestamp>(values_[kDatetimeFeature]))
        throw PolicyError("invalid-event", "event slot 0 must be a non-null timestamp");
    if (!std::holds_alternative<Identifier>(values_[kActionFeature]))
        throw PolicyError("invalid-event", "event slot 1 must be a non-null action identifier");
}

namespace {

bool kindMatches(const Value& v, Datatype d) {
    switch (kindOf(v)) {
        case ValueKind::Null: return true;
        case ValueKind::Timestamp: return d == Datatype::Timestamp;
        case ValueKind::Number: return d == Datatype::Numeric;
        case ValueKind::Text: return d == Datatype::String;
        case ValueKind::Identifier: return d == Datatype::Identifier;
        case ValueKind::IdentifierSet: return d == Datatype::IdentifierSet;
    }
    return false;
}

}// namespace

bool conformsTo(const Event& e, const FeatureSchema& schema) {
    if (e.size() != schema.size()) return false;
    for (FeatureId i = 0; i < e.size(); ++i)
        if (!kindMatches(e[i], schema.feature(i).datatype)) return false;
    return true;
}

World::World(std::vector<Event> events) : events_(std::move(events)) {
    std::sort(events_.begin(), events_.end());
    events_.erase(std::unique(events_.begin(), events_.end()), events_.end());
}

bool World::contains(const Event& e) const { return std::binary_search(events_.begin(), events_.end(), e); }

World World::with(Event e) const {
    auto copy = events_;
    copy.push_back(std::move(e));
    return World(std::move(copy));
}

void requireConforms(const World& w, const FeatureSchema& schema) {
    for (const auto& e : w)
        if (!conformsTo(e, schema))
            throw PolicyError("schema-mismatch", "event at timestamp " + std::to_string(e.timestamp()) +
                                                     " does not conform to the feature schema");
}

}// namespace odrl
