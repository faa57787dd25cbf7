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

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace odrl {

using FeatureId = std::size_t;

inline constexpr FeatureId kDatetimeFeature = 0;
inline constexpr FeatureId kActionFeature = 1;

enum class Datatype { Timestamp, Numeric, String, Identifier, IdentifierSet };

std::string_view toString(Datatype d);
std::optional<Datatype> datatypeFromString(std::string_view s);

/// The ODRL component a feature belongs to: either the rule-wide marker (rho) or
/// a feature index. A core component points at itself; a refinement points at
/// the core component it refines.
class ComponentRef {
  public:
    static ComponentRef ruleWide() { return ComponentRef{}; }
    static ComponentRef feature(FeatureId f) { return ComponentRef{f}; }

    bool isRuleWide() const { return !target_.has_value(); }
    FeatureId target() const { return *target_; }

    friend bool operator==(const ComponentRef&, const ComponentRef&) = default;
    friend auto operator<=>(const ComponentRef&, const ComponentRef&) = default;

  private:
    ComponentRef() = default;
    explicit ComponentRef(FeatureId f) : target_(f) {}
    std::optional<FeatureId> target_;
};

/// How a core component surfaces in ODRL documents.
enum class Role { None, Action, Target, Assignee, Assigner };

std::string_view toString(Role r);
std::optional<Role> roleFromString(std::string_view s);

struct FeatureDecl {
    FeatureId id = 0;
    std::string name;
    Datatype datatype = Datatype::Identifier;
    ComponentRef component = ComponentRef::ruleWide();
    Role role = Role::None;
    /// ODRL leftOperand term mapped onto this feature; defaults to `name`.
    std::optional<std::string> leftOperand;
    /// Static class set i_c used by isA.
    std::set<std::string> classes;
    /// Per-event class set: an identifier-set feature overriding `classes`.
    std::optional<FeatureId> classFeature;

    friend bool operator==(const FeatureDecl&, const FeatureDecl&) = default;
};

/// Validated, immutable feature schema. Feature 0 is the timestamp, feature 1 the action.
class FeatureSchema {
  public:
    /// Validates every invariant; throws SchemaError naming the violated one.
    explicit FeatureSchema(std::vector<FeatureDecl> features);

    std::size_t size() const { return features_.size(); }
    const std::vector<FeatureDecl>& features() const { return features_; }
    const FeatureDecl& feature(FeatureId i) const;
    bool contains(FeatureId i) const { return i < features_.size(); }

    std::optional<FeatureId> findByName(std::string_view name) const;
    std::optional<FeatureId> findByRole(Role role) const;

    /// gamma_i. Throws SchemaError "unknown-feature".
    ComponentRef component(FeatureId i) const;

    /// True for features whose component is themselves (Action, Asset, Party).
    bool isCoreComponent(FeatureId i) const;

    friend bool operator==(const FeatureSchema&, const FeatureSchema&) = default;

  private:
    std::vector<FeatureDecl> features_;
};

/// Validation entry point; idempotent on already-valid input.
FeatureSchema validateSchema(std::vector<FeatureDecl> raw);

/// gamma lookup as a free function.
ComponentRef featureComponent(const FeatureSchema& schema, FeatureId i);

}// namespace odrl
