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

#include <optional>
#include <string>
#include <vector>

namespace odrl {

/// A conjunction of conditions (tau).
///
/// `residual()` holds extra conditions produced by normalization when a
/// semantic difference cannot be written with well-formed conditions alone
/// (for example "any assignee except Bob"). They take part in matching but are
/// exempt from the single-component and core-equality well-formedness items.
/// Hand-written rules never have residual conditions.
///
/// Conditions are kept sorted and deduplicated, so equality is set equality.
/// The label is metadata and does not participate in equality.
class EventRule {
  public:
    EventRule() = default;
    explicit EventRule(std::vector<Condition> conditions, std::string label = {},
                       std::vector<Condition> residual = {});

    const std::vector<Condition>& conditions() const { return conditions_; }
    const std::vector<Condition>& residual() const { return residual_; }
    const std::string& label() const { return label_; }
    bool hasResidual() const { return !residual_.empty(); }

    EventRule withLabel(std::string label) const;

    /// I_tau over base and residual conditions.
    std::set<FeatureId> features() const;

    /// Top-level <Action, =, a>, if present.
    std::optional<std::string> action() const;

    /// Top-level scalar equality on feature `f`, if present.
    std::optional<Value> topLevelEquality(FeatureId f) const;

    friend bool operator==(const EventRule& a, const EventRule& b) {
        return a.conditions_ == b.conditions_ && a.residual_ == b.residual_;
    }
    friend std::strong_ordering operator<=>(const EventRule& a, const EventRule& b);

  private:
    std::vector<Condition> conditions_;
    std::vector<Condition> residual_;
    std::string label_;
};

/// Label, or `fallback` when the rule is unlabelled.
std::string displayName(const EventRule& rule, const std::string& fallback);

/// <P, F, O>. Each component is a set: duplicate rules collapse, keeping the
/// first occurrence (and its label).
class LitePolicy {
  public:
    LitePolicy() = default;
    LitePolicy(std::vector<EventRule> permissions, std::vector<EventRule> prohibitions,
               std::vector<EventRule> obligations);

    const std::vector<EventRule>& permissions() const { return permissions_; }
    const std::vector<EventRule>& prohibitions() const { return prohibitions_; }
    const std::vector<EventRule>& obligations() const { return obligations_; }

    bool hasPermission(const EventRule& r) const;
    bool hasProhibition(const EventRule& r) const;
    bool hasObligation(const EventRule& r) const;

    /// Every rule, in P, F, O order.
    std::vector<const EventRule*> allRules() const;

    friend bool operator==(const LitePolicy&, const LitePolicy&) = default;

  private:
    std::vector<EventRule> permissions_;
    std::vector<EventRule> prohibitions_;
    std::vector<EventRule> obligations_;
};

/// Permission with a duty that must precede it.
struct DutyPair {
    EventRule permission;
    EventRule duty;
    friend bool operator==(const DutyPair&, const DutyPair&) = default;
};

/// Permission with a duty and the consequence owed when the duty was skipped.
struct DutyConsequence {
    EventRule permission;
    EventRule duty;
    EventRule consequence;
    friend bool operator==(const DutyConsequence&, const DutyConsequence&) = default;
};

/// Prohibition (not in F) with a remedy that must follow any violation.
struct RemedyPair {
    EventRule prohibition;
    EventRule remedy;
    friend bool operator==(const RemedyPair&, const RemedyPair&) = default;
};

/// Obligation (not in O) carrying a <Datetime, <=, t> deadline, with the
/// consequence owed when it is fulfilled late.
struct ObligationConsequence {
    EventRule obligation;
    EventRule consequence;
    friend bool operator==(const ObligationConsequence&, const ObligationConsequence&) = default;
};

/// <P, F, O, DP, DPC, FR, OC>. Construction enforces the membership invariants
/// and throws PolicyError "policy-invariant-violation" on breach.
class FullPolicy {
  public:
    FullPolicy() = default;
    explicit FullPolicy(LitePolicy lite, std::vector<DutyPair> duties = {},
                        std::vector<DutyConsequence> dutiesWithConsequence = {},
                        std::vector<RemedyPair> remedies = {},
                        std::vector<ObligationConsequence> obligationConsequences = {});

    const LitePolicy& lite() const { return lite_; }
    const std::vector<DutyPair>& duties() const { return duties_; }
    const std::vector<DutyConsequence>& dutiesWithConsequence() const { return dutiesWithConsequence_; }
    const std::vector<RemedyPair>& remedies() const { return remedies_; }
    const std::vector<ObligationConsequence>& obligationConsequences() const { return obligationConsequences_; }

    /// True when DP, DPC, FR and OC are all empty.
    bool isLite() const;

    /// Every rule occurring anywhere in the policy (duplicates possible).
    std::vector<const EventRule*> allRules() const;

    friend bool operator==(const FullPolicy&, const FullPolicy&) = default;

  private:
    LitePolicy lite_;
    std::vector<DutyPair> duties_;
    std::vector<DutyConsequence> dutiesWithConsequence_;
    std::vector<RemedyPair> remedies_;
    std::vector<ObligationConsequence> obligationConsequences_;
};

/// Deadlines t of top-level <Datetime, <=, t> conditions.
std::vector<std::int64_t> deadlinesOf(const EventRule& rule);

}// namespace odrl
