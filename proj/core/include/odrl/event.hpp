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
#include <set>
#include <span>
#include <vector>

namespace odrl {

class WitnessDomain;

/// An (n+1)-tuple of feature values. Slot 0 is a timestamp, slot 1 the action.
class Event {
  public:
    /// Throws PolicyError "invalid-event" unless slot 0 holds a Timestamp and
    /// slot 1 an Identifier.
    explicit Event(std::vector<Value> values);

    std::size_t size() const { return values_.size(); }
    const Value& operator[](FeatureId i) const { return values_[i]; }
    const std::vector<Value>& values() const { return values_; }
    std::int64_t timestamp() const { return std::get<Timestamp>(values_[kDatetimeFeature]).ticks; }
    const std::string& action() const { return std::get<Identifier>(values_[kActionFeature]).value; }

    friend bool operator==(const Event&, const Event&) = default;
    friend std::strong_ordering operator<=>(const Event&, const Event&) = default;

  private:
    friend class WitnessDomain;
    Event() = default;

    std::vector<Value> values_;
};

/// True when the event has n+1 slots and each value is Null or of its feature's datatype.
bool conformsTo(const Event& e, const FeatureSchema& schema);

/// Finite set of events; duplicates collapse. Iteration is in value order,
/// which sorts by timestamp first.
class World {
  public:
    World() = default;
    explicit World(std::vector<Event> events);

    const std::vector<Event>& events() const { return events_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }
    bool contains(const Event& e) const;
    auto begin() const { return events_.begin(); }
    auto end() const { return events_.end(); }

    /// Returns a copy with `e` added.
    World with(Event e) const;

    friend bool operator==(const World&, const World&) = default;

  private:
    std::vector<Event> events_;
};

/// Throws PolicyError "schema-mismatch" naming the first non-conforming event.
void requireConforms(const World& w, const FeatureSchema& schema);

}// namespace odrl
