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

#include <odrl/compare/options.hpp>
#include <odrl/compare/witness_domain.hpp>
#include <odrl/event.hpp>
#include <odrl/rule.hpp>
#include <odrl/schema.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace odrl {

// ---------------------------------------------------------------------------
// Rule containment and overlap, decided by enumeration over a WitnessDomain.
// Every check requires well-formed rules and throws "ill-formed-rule" otherwise.
// ---------------------------------------------------------------------------

/// tau ⊑ tau': every event matching `a` matches `b`.
bool ruleContains(const EventRule& a, const EventRule& b, const FeatureSchema& schema,
                  const CompareOptions& options = {});

/// First probe event (lexicographic order) matching `a` but not `b`.
std::optional<Event> containmentCounterexample(const EventRule& a, const EventRule& b,
                                               const FeatureSchema& schema, const CompareOptions& options = {});

/// tau ⊓ tau': some event matches both.
bool rulesOverlap(const EventRule& a, const EventRule& b, const FeatureSchema& schema,
                  const CompareOptions& options = {});
std::optional<Event> overlapWitness(const EventRule& a, const EventRule& b, const FeatureSchema& schema,
                                    const CompareOptions& options = {});

bool isSatisfiable(const EventRule& rule, const FeatureSchema& schema, const CompareOptions& options = {});

/// Set-lifted, per-event containment: every event matching some rule of `a`
/// matches some rule of `b`.
bool ruleSetContains(std::span<const EventRule> a, std::span<const EventRule> b, const FeatureSchema& schema,
                     const CompareOptions& options = {});
std::optional<Event> ruleSetCounterexample(std::span<const EventRule> a, std::span<const EventRule> b,
                                           const FeatureSchema& schema, const CompareOptions& options = {});

/// Syntactic pairwise subsumption check: sound but incomplete fast path for
/// ruleSetContains (each rule of `a` is a superset of some rule of `b`).
bool ruleSetSubsumedPairwise(std::span<const EventRule> a, std::span<const EventRule> b);

/// No permission or obligation overlaps a prohibition, and O ⊑ P (per event).
bool isConsistent(const LitePolicy& policy, const FeatureSchema& schema, const CompareOptions& options = {});

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

/// a ∖ b as a set of rules whose union matches exactly the events matching `a`
/// and not `b`. Built by complementing b's conditions one component group at a
/// time; groups that cannot be negated with well-formed conditions go to the
/// piece's residual conditions. Unsatisfiable pieces are dropped.
std::vector<EventRule> ruleDifference(const EventRule& a, const EventRule& b, const FeatureSchema& schema,
                                      const CompareOptions& options = {});

/// Equivalent consistent policy with no prohibitions: permissions lose their
/// forbidden parts, obligations lose forbidden and unpermitted parts. An
/// obligation with nothing left becomes an unsatisfiable rule, since the
/// original could never be fulfilled in a valid world. Throws
/// "normalization-blowup" past `options.maxDisjuncts`.
LitePolicy normalize(const LitePolicy& policy, const FeatureSchema& schema, const CompareOptions& options = {});

// ---------------------------------------------------------------------------
// Policy comparison
// ---------------------------------------------------------------------------

enum class ConflictKind { Symmetric, Asymmetric };
enum class ConflictCause { PermissionsNotContained, ObligationNotAgreed };
/// LeftInRight: first policy ⊑ second policy failed (requester ⊑ provider).
enum class Direction { LeftInRight, RightInLeft };

std::string_view toString(ConflictKind k);
std::string_view toString(ConflictCause c);
std::string_view toString(Direction d);

struct ContainmentFailure {
    Direction direction = Direction::LeftInRight;
    ConflictCause cause = ConflictCause::PermissionsNotContained;
    /// The uncovered provider obligation, or the uncovered requester permission.
    std::vector<std::string> rules;
    /// World valid for the contained-side policy and violating for the other.
    World witness;
};

struct ConflictVerdict {
    ConflictKind kind = ConflictKind::Asymmetric;
    std::vector<ContainmentFailure> failures;
    bool conflict() const { return !failures.empty(); }
};

/// Asymmetric conflict: requester ⋢ provider, decided by the two rule-level
/// conditions (permission containment; every provider obligation contains some
/// requester obligation). Inputs must be consistent unless
/// `options.autoNormalize`; otherwise throws "inconsistent-input".
ConflictVerdict asymmetricConflict(const LitePolicy& requester, const LitePolicy& provider,
                                   const FeatureSchema& schema, const CompareOptions& options = {});

/// Symmetric conflict: inequivalence, i.e. containment fails in either direction.
ConflictVerdict symmetricConflict(const LitePolicy& left, const LitePolicy& right, const FeatureSchema& schema,
                                  const CompareOptions& options = {});

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

struct OracleResult {
    bool contained = true;
    /// A world where the first policy is valid and the second is not.
    std::optional<World> counterexample;
    std::size_t worldsChecked = 0;
};

/// Enumerates every world of at most |O|+1 events drawn from the witness
/// domain of both policies and reports whether one is valid for `p` but
/// violating for `q`. Events are grouped by the vector of rule matches they
/// produce, since validity depends on nothing else. Throws "domain-too-large".
OracleResult bruteForceContainment(const LitePolicy& p, const LitePolicy& q, const FeatureSchema& schema,
                                   const CompareOptions& options = {});

/// Best-effort variant for full policies: temporal probes are enabled and
/// worlds hold up to `maxWorldSize` events (default |O| + |DP| + |DPC| + |FR| + |OC| + 1).
/// Not complete; a `true` answer is only evidence of containment.
OracleResult bruteForceContainment(const FullPolicy& p, const FullPolicy& q, const FeatureSchema& schema,
                                   const CompareOptions& options = {},
                                   std::optional<std::size_t> maxWorldSize = std::nullopt);

}// namespace odrl
