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

#include "builders.hpp"

#include <odrl/compare/options.hpp>

#include <random>

namespace odrl::test {

struct GenConfig {
    /// Refinements on Print.Resolution and Book.Pages.
    bool numeric = true;
    /// Asset.Tags, Location/isA and Note conditions; requires extendedSchema().
    bool extended = false;
    /// Boolean combinations inside a component group.
    bool complex = true;
    std::size_t maxPermissions = 2;
    std::size_t maxProhibitions = 1;
    std::size_t maxObligations = 2;
};

/// Seeded random generator of well-formed rules, policies, events and worlds
/// over the sample (or extended) schema.
class Generator {
  public:
    Generator(std::uint64_t seed, GenConfig config = {});

    std::mt19937_64& engine() { return rng_; }
    bool chance(double p);
    std::size_t below(std::size_t n);
    template<typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

    EventRule rule();
    LitePolicy policy();
    /// Random policy whose tuples draw their permission-side rules from P.
    FullPolicy fullPolicy();
    /// A consistent policy: a random policy that happens to be consistent, or a normalized one.
    LitePolicy consistentPolicy(const FeatureSchema& schema, const CompareOptions& options = {});

    Event event();
    World world(std::size_t maxEvents);

    /// Arbitrary simple condition on feature f, including incomparable constants.
    SimpleCondition anySimple(FeatureId f);
    /// Random boolean tree over arbitrary simple conditions on `features`.
    Condition anyCondition(const std::vector<FeatureId>& features, int depth);

    const FeatureSchema& schema() const { return schema_; }

  private:
    Condition combine(std::vector<Condition> leaves);
    Condition datetimeCondition();
    Condition numericCondition(FeatureId f);

    GenConfig config_;
    FeatureSchema schema_;
    std::mt19937_64 rng_;
};

}// namespace odrl::test
