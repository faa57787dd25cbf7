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
#include <odrl/schema.hpp>

#include <algorithm>
#include <array>
#include <map>

namespace odrl {

namespace {

constexpr std::array<std::pair<Datatype, std::string_view>, 5> kDatatypeNames{{
    {Datatype::Timestamp, "timestamp"},
    {Datatype::Numeric, "numeric"},
    {Datatype::String, "string"},
    {Datatype::Identifier, "identifier"},
    {Datatype::IdentifierSet, "identifier-set"},
}};

constexpr std::array<std::pair<Role, std::string_view>, 5> kRoleNames{{
    {Role::None, "none"},
    {Role::Action, "action"},
    {Role::Target, "target"},
    {Role::Assignee, "assignee"},
    {Role::Assigner, "assigner"},
}};

std::string where(const FeatureDecl& f) { return "feature " + std::to_string(f.id) + " (" + f.name + ")"; }

}// namespace

std::string_view toString(Datatype d) {
    for (auto [k, n] : kDatatypeNames)
        if (k == d) return n;
    return "?";
}

std::optional<Datatype> datatypeFromString(std::string_view s) {
    for (auto [k, n] : kDatatypeNames)
        if (n == s) return k;
    return std::nullopt;
}

std::string_view toString(Role r) {
    for (auto [k, n] : kRoleNames)
        if (k == r) return n;
    return "?";
}

std::optional<Role> roleFromString(std::string_view s) {
    for (auto [k, n] : kRoleNames)
        if (n == s) return k;
    return std::nullopt;
}

FeatureSchema::FeatureSchema(std::vector<FeatureDecl> features) : features_(std::move(features)) {
    std::sort(features_.begin(), features_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (std::size_t k = 0; k < features_.size(); ++k) {
        if (k > 0 && features_[k].id == features_[k - 1].id)
            throw SchemaError("duplicate-index", "feature index " + std::to_string(features_[k].id) + " declared twice");
        if (features_[k].id != k)
            throw SchemaError("missing-index", "feature indices must be contiguous from 0; index " + std::to_string(k) + " is missing");
    }
    if (features_.size() < 2)
        throw SchemaError(features_.empty() ? "wrong-datetime-slot" : "wrong-action-slot",
                          "a schema needs at least the Datetime (0) and Action (1) features");

    const auto& dt = features_[kDatetimeFeature];
    if (dt.datatype != Datatype::Timestamp || !dt.component.isRuleWide())
        throw SchemaError("wrong-datetime-slot", where(dt) + " must be a rule-wide timestamp");
    auto& action = features_[kActionFeature];
    if (action.datatype != Datatype::Identifier || action.component != ComponentRef::feature(kActionFeature))
        throw SchemaError("wrong-action-slot", where(action) + " must be the Action component (identifier, own component)");
    if (action.role != Role::None && action.role != Role::Action)
        throw SchemaError("wrong-action-slot", where(action) + " must have role 'action'");
    action.role = Role::Action;

    std::map<std::string, FeatureId> names;
    for (const auto& f : features_) {
        if (f.name.empty()) throw SchemaError("duplicate-name", where(f) + " has an empty name");
        if (!names.emplace(f.name, f.id).second) throw SchemaError("duplicate-name", "feature name '" + f.name + "' declared twice");
        if (!f.component.isRuleWide()) {
            const auto target = f.component.target();
            if (target >= features_.size())
                throw SchemaError("bad-gamma-target", where(f) + " refines nonexistent feature " + std::to_string(target));
            if (target != f.id) {
                const auto& t = features_[target];
                // A refinement must point at a core component, never at another refinement.
                if (t.component != ComponentRef::feature(t.id))
                    throw SchemaError("bad-gamma-target", where(f) + " refines " + where(t) + ", which is not a core component");
            }
        }
        const bool core = !f.component.isRuleWide() && f.component.target() == f.id;
        if (!core && f.role != Role::None)
            throw SchemaError("bad-gamma-target", where(f) + " has role '" + std::string(toString(f.role)) + "' but is not a core component");
        if (f.id != kActionFeature && f.role == Role::Action)
            throw SchemaError("wrong-action-slot", "only feature 1 may have role 'action'");
        if (f.classFeature) {
            if (*f.classFeature >= features_.size() || features_[*f.classFeature].datatype != Datatype::IdentifierSet)
                throw SchemaError("bad-class-feature", where(f) + " classFeature must reference an identifier-set feature");
        }
    }
    for (Role r : {Role::Target, Role::Assignee, Role::Assigner}) {
        auto n = std::count_if(features_.begin(), features_.end(), [r](const auto& f) { return f.role == r; });
        if (n > 1) throw SchemaError("duplicate-role", "role '" + std::string(toString(r)) + "' assigned to more than one feature");
    }
}

const FeatureDecl& FeatureSchema::feature(FeatureId i) const {
    if (i >= features_.size()) throw SchemaError("unknown-feature", "unknown feature index " + std::to_string(i));
    return features_[i];
}

std::optional<FeatureId> FeatureSchema::findByName(std::string_view name) const {
    for (const auto& f : features_)
        if (f.name == name) return f.id;
    return std::nullopt;
}

std::optional<FeatureId> FeatureSchema::findByRole(Role role) const {
    for (const auto& f : features_)
        if (f.role == role) return f.id;
    return std::nullopt;
}

ComponentRef FeatureSchema::component(FeatureId i) const { return feature(i).component; }

bool FeatureSchema::isCoreComponent(FeatureId i) const {
    const auto c = component(i);
    return !c.isRuleWide() && c.target() == i;
}

FeatureSchema validateSchema(std::vector<FeatureDecl> raw) { return FeatureSchema(std::move(raw)); }

ComponentRef featureComponent(const FeatureSchema& schema, FeatureId i) { return schema.component(i); }

}// namespace odrl
