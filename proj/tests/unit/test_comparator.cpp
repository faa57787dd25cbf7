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

#include "builders.hpp"
#include "properties.hpp"
#include "reference.hpp"

#include <odrl/comparator.hpp>
#include <odrl/evaluator.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace odrl;
using namespace odrl::test;

namespace {

Condition between(std::int64_t lo, std::int64_t hi) {
    return Condition(cond(kDatetime, Operator::Gteq, ts(lo))) && cond(kDatetime, Operator::Lteq, ts(hi));
}

EventRule printPicture() { return rule("Alice", "Print", "Picture", {}, "print"); }
EventRule printPictureLowRes() {
    return rule("Alice", "Print", "Picture", {cond(kResolution, Operator::Lteq, num(400))}, "print-low");
}

template<typename F>
std::string errorCode(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "no error";
}

}// namespace

TEST(WitnessDomain, ProbesCoverConstantsGapsAndNull) {
    const auto s = sampleSchema();
    const auto a = rule("Bob", "Read", "Book", {cond(kPages, Operator::Gt, num(250)), between(3, 5)});
    const std::vector<const EventRule*> rules{&a};
    const WitnessDomain d(s, rules);
    const auto& pages = d.probes(kPages);
    EXPECT_NE(std::find(pages.begin(), pages.end(), Value(num(250))), pages.end());
    EXPECT_NE(std::find(pages.begin(), pages.end(), Value{Null{}}), pages.end());
    const auto& times = d.probes(kDatetime);
    for (std::int64_t t : {2, 3, 4, 5, 6}) EXPECT_NE(std::find(times.begin(), times.end(), Value(ts(t))), times.end());
    const auto& actors = d.probes(kActor);
    EXPECT_EQ(actors.size(), 3u);
    EXPECT_EQ(d.probes(kResolution), std::vector<Value>{Value{Null{}}});
    EXPECT_EQ(d.productSize(), times.size() * d.probes(kAction).size() * actors.size() * d.probes(kAsset).size() *
                                   pages.size());
}

TEST(WitnessDomain, LargeSetUniverseIsRejected) {
    const auto s = extendedSchema();
    ValueSet many;
    for (int i = 0; i < 14; ++i) many.insert(id("t" + std::to_string(i)));
    const auto r = rule("Bob", "Read", "Book", {SimpleCondition(kTags, Operator::IsAnyOf, many)});
    EXPECT_EQ(errorCode([&] { isSatisfiable(r, s); }), "domain-too-large");
}

TEST(RuleContains, NarrowerWindowIsContained) {
    const auto s = sampleSchema();
    const auto narrow = rule("Bob", "Read", "Book", {between(3, 5), cond(kPages, Operator::Gt, num(250))});
    const auto wide = rule("Bob", "Read", "Book", {between(1, 10), cond(kPages, Operator::Gt, num(200))});
    EXPECT_TRUE(ruleContains(narrow, wide, s));
    EXPECT_FALSE(ruleContains(wide, narrow, s));
    EXPECT_TRUE(ruleContains(narrow, narrow, s));
    EXPECT_FALSE(containmentCounterexample(narrow, wide, s));
}

TEST(RuleContains, CounterexampleWitnessesFailure) {
    const auto s = sampleSchema();
    EXPECT_FALSE(ruleContains(printPicture(), printPictureLowRes(), s));
    const auto e = containmentCounterexample(printPicture(), printPictureLowRes(), s);
    ASSERT_TRUE(e);
    EXPECT_TRUE(refMatch(printPicture(), *e, s));
    EXPECT_FALSE(refMatch(printPictureLowRes(), *e, s));
    EXPECT_EQ((*e)[kResolution], num(401));
}

TEST(RuleContains, IllFormedRuleThrows) {
    EXPECT_EQ(errorCode([] { ruleContains(EventRule({eq(kActor, "Bob")}), samplePermission(), sampleSchema()); }),
              "ill-formed-rule");
}

TEST(RulesOverlap, DisjointEqualitiesDoNotOverlap) {
    const auto s = sampleSchema();
    EXPECT_FALSE(rulesOverlap(samplePermission(), sampleProhibition(), s));
    EXPECT_TRUE(rulesOverlap(samplePermission(), samplePermission(), s));
}

TEST(RulesOverlap, SharedBoundary) {
    const auto s = sampleSchema();
    const auto a = rule("Bob", "Read", "Book", {between(3, 5)});
    const auto b = rule("Bob", "Read", "Book", {between(5, 9)});
    EXPECT_TRUE(rulesOverlap(a, b, s));
    const auto w = overlapWitness(a, b, s);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->timestamp(), 5);
    EXPECT_FALSE(rulesOverlap(a, rule("Bob", "Read", "Book", {between(6, 9)}), s));
}

TEST(IsSatisfiable, ContradictoryWindowIsUnsatisfiable) {
    const auto s = sampleSchema();
    EXPECT_TRUE(isSatisfiable(samplePermission(), s));
    EXPECT_FALSE(isSatisfiable(rule("Bob", "Read", "Book", {between(5, 3)}), s));
}

TEST(RuleSetContains, UnionCoversPerEvent) {
    const auto s = sampleSchema();
    const std::vector<EventRule> whole{rule("Bob", "Read", "Book", {between(1, 10)})};
    const std::vector<EventRule> halves{rule("Bob", "Read", "Book", {between(1, 5)}),
                                        rule("Bob", "Read", "Book", {cond(kDatetime, Operator::Gt, ts(5))})};
    EXPECT_TRUE(ruleSetContains(whole, halves, s));
    EXPECT_FALSE(ruleSetContains(halves, whole, s));
    EXPECT_FALSE(ruleSetSubsumedPairwise(whole, halves));
    EXPECT_TRUE(ruleSetSubsumedPairwise(whole, whole));
    const auto e = ruleSetCounterexample(halves, whole, s);
    ASSERT_TRUE(e);
    EXPECT_GT(e->timestamp(), 10);
}

TEST(IsConsistent, DefinitionCases) {
    const auto s = sampleSchema();
    EXPECT_TRUE(isConsistent(LitePolicy({samplePermission()}, {sampleProhibition()}, {}), s));
    EXPECT_FALSE(isConsistent(LitePolicy({samplePermission()}, {samplePermission()}, {}), s));
    EXPECT_FALSE(isConsistent(LitePolicy({}, {}, {sampleObligation()}), s));
    EXPECT_FALSE(isConsistent(samplePolicy(), s));
    EXPECT_TRUE(isConsistent(LitePolicy({samplePermission(), rule("Bob", "Read", "Book")}, {}, {sampleObligation()}), s));
}

TEST(RuleDifference, ComplementsRefinement) {
    const auto s = sampleSchema();
    const auto high = rule("Alice", "Print", "Picture", {cond(kResolution, Operator::Gt, num(1000))});
    const auto pieces = ruleDifference(printPicture(), high, s);
    ASSERT_FALSE(pieces.empty());
    for (const auto& e : sampleGrid()) {
        bool inPieces = false;
        for (const auto& p : pieces) inPieces = inPieces || refMatch(p, e, s);
        EXPECT_EQ(inPieces, refMatch(printPicture(), e, s) && !refMatch(high, e, s));
    }
    EXPECT_TRUE(ruleDifference(high, printPicture(), s).empty());
    EXPECT_EQ(ruleDifference(printPicture(), sampleProhibition(), s), std::vector<EventRule>{printPicture()});
}

TEST(RuleDifference, CoreExclusionUsesResidual) {
    const auto s = sampleSchema();
    const auto anyone = rule("", "Read", "Book");
    const auto pieces = ruleDifference(anyone, rule("Bob", "Read", "Book"), s);
    ASSERT_EQ(pieces.size(), 1u);
    EXPECT_TRUE(pieces[0].hasResidual());
    EXPECT_TRUE(checkWellFormed(pieces[0], s).ok());
    EXPECT_TRUE(refMatch(pieces[0], event(1, "Read", "Alice", "Book"), s));
    EXPECT_FALSE(refMatch(pieces[0], event(1, "Read", "Bob", "Book"), s));
}

TEST(Normalize, ConsistentPolicyOnlyLosesProhibitions) {
    const auto s = sampleSchema();
    const LitePolicy p({samplePermission()}, {sampleProhibition()}, {});
    const auto n = normalize(p, s);
    EXPECT_TRUE(n.prohibitions().empty());
    EXPECT_EQ(n.permissions(), p.permissions());
    EXPECT_EQ(n.permissions()[0].label(), "p1");
}

TEST(Normalize, ForbiddenRefinementIsRemovedFromPermission) {
    const auto s = sampleSchema();
    const auto high = rule("Alice", "Print", "Picture", {cond(kResolution, Operator::Gt, num(1000))});
    const auto n = normalize(LitePolicy({printPicture()}, {high}, {}), s);
    EXPECT_TRUE(n.prohibitions().empty());
    EXPECT_TRUE(isConsistent(n, s));
    const auto allowed = [&](const Event& e) { return isValid(n, World({e}), s); };
    EXPECT_TRUE(allowed(event(1, "Print", "Alice", "Picture", 500)));
    EXPECT_TRUE(allowed(event(1, "Print", "Alice", "Picture")));
    EXPECT_FALSE(allowed(event(1, "Print", "Alice", "Picture", 2000)));
}

TEST(Normalize, UnpermittedObligationBecomesUnsatisfiable) {
    const auto s = sampleSchema();
    const auto n = normalize(LitePolicy({}, {}, {rule("Bob", "Read", "Book", {}, "read")}), s);
    ASSERT_EQ(n.obligations().size(), 1u);
    EXPECT_EQ(n.obligations()[0].label(), "read");
    EXPECT_FALSE(isSatisfiable(n.obligations()[0], s));
    EXPECT_TRUE(isConsistent(n, s));
}

TEST(Normalize, BlowupCapIsEnforced) {
    const auto s = sampleSchema();
    std::vector<EventRule> forbidden;
    for (int t = 1; t <= 8; ++t)
        forbidden.push_back(rule("Bob", "Read", "Book", {cond(kPages, Operator::Eq, num(t)), cond(kDatetime, Operator::Eq, ts(t))}));
    CompareOptions tight;
    tight.maxDisjuncts = 4;
    EXPECT_EQ(errorCode([&] { normalize(LitePolicy({rule("Bob", "Read", "Book")}, forbidden, {}), s, tight); }),
              "normalization-blowup");
}

TEST(AsymmetricConflict, RestrictedProviderPermissions) {
    const auto s = sampleSchema();
    const LitePolicy requester({printPicture()}, {}, {});
    const LitePolicy provider({printPictureLowRes()}, {}, {});
    const auto v = asymmetricConflict(requester, provider, s);
    ASSERT_TRUE(v.conflict());
    ASSERT_EQ(v.failures.size(), 1u);
    EXPECT_EQ(v.failures[0].cause, ConflictCause::PermissionsNotContained);
    EXPECT_EQ(v.failures[0].rules, std::vector<std::string>{"print"});
    ASSERT_EQ(v.failures[0].witness.size(), 1u);
    const auto& e = v.failures[0].witness.events()[0];
    EXPECT_TRUE(isValid(requester, v.failures[0].witness, s));
    EXPECT_FALSE(isValid(provider, v.failures[0].witness, s));
    EXPECT_FALSE(refMatch(printPictureLowRes(), e, s));
    EXPECT_EQ(e[kResolution], num(401));
    EXPECT_FALSE(asymmetricConflict(provider, requester, s).conflict());
}

TEST(AsymmetricConflict, IdenticalPoliciesAgree) {
    const auto s = sampleSchema();
    const LitePolicy p({samplePermission(), rule("Bob", "Read", "Book")}, {rule("Carol", "Read", "Book")},
                       {sampleObligation()});
    EXPECT_FALSE(asymmetricConflict(p, p, s).conflict());
    EXPECT_FALSE(symmetricConflict(p, p, s).conflict());
    EXPECT_TRUE(bruteForceContainment(p, p, s).contained);
}

TEST(AsymmetricConflict, UnagreedProviderObligation) {
    const auto s = sampleSchema();
    const auto read = rule("Bob", "Read", "Book", {}, "read");
    const auto early = rule("Bob", "Read", "Book", {cond(kDatetime, Operator::Lt, ts(3))}, "read-early");
    const LitePolicy requester({read}, {}, {});
    const LitePolicy provider({read}, {}, {early});
    const auto v = asymmetricConflict(requester, provider, s);
    ASSERT_EQ(v.failures.size(), 1u);
    EXPECT_EQ(v.failures[0].cause, ConflictCause::ObligationNotAgreed);
    EXPECT_EQ(v.failures[0].rules, std::vector<std::string>{"read-early"});
    EXPECT_TRUE(v.failures[0].witness.empty());
    const auto oracle = bruteForceContainment(requester, provider, s);
    EXPECT_FALSE(oracle.contained);
    ASSERT_TRUE(oracle.counterexample);
    EXPECT_LE(oracle.counterexample->size(), 1u);
}

TEST(AsymmetricConflict, InconsistentInputNeedsNormalization) {
    const auto s = sampleSchema();
    EXPECT_EQ(errorCode([&] { asymmetricConflict(samplePolicy(), samplePolicy(), s); }), "inconsistent-input");
    CompareOptions options;
    options.autoNormalize = true;
    EXPECT_FALSE(asymmetricConflict(samplePolicy(), samplePolicy(), s, options).conflict());
}

TEST(SymmetricConflict, ReportsFailingDirection) {
    const auto s = sampleSchema();
    const LitePolicy broad({printPicture()}, {}, {});
    const LitePolicy narrow({printPictureLowRes()}, {}, {});
    const auto v = symmetricConflict(broad, narrow, s);
    ASSERT_EQ(v.failures.size(), 1u);
    EXPECT_EQ(v.failures[0].direction, Direction::LeftInRight);
    EXPECT_EQ(v.kind, ConflictKind::Symmetric);
    const auto reverse = symmetricConflict(narrow, broad, s);
    ASSERT_EQ(reverse.failures.size(), 1u);
    EXPECT_EQ(reverse.failures[0].direction, Direction::RightInLeft);
}

TEST(SymmetricConflict, EachSideMissingSomethingFailsBothWays) {
    const auto s = sampleSchema();
    const auto read = rule("Bob", "Read", "Book", {}, "read");
    const auto print = rule("Alice", "Print", "Book", {}, "print");
    const LitePolicy left({read, print}, {}, {print});
    const LitePolicy right({read}, {}, {read});
    const auto v = symmetricConflict(left, right, s);
    std::set<Direction> directions;
    for (const auto& f : v.failures) directions.insert(f.direction);
    EXPECT_EQ(directions, (std::set<Direction>{Direction::LeftInRight, Direction::RightInLeft}));
}

TEST(BruteForce, FullPoliciesUseTemporalProbes) {
    const auto s = sampleSchema();
    const auto print = rule("Alice", "Print", "Book", {}, "print");
    const auto read = rule("Bob", "Read", "Book", {}, "read");
    const FullPolicy plain(LitePolicy({print, read}, {}, {}));
    const FullPolicy withDuty(LitePolicy({print, read}, {}, {}), {{print, read}});
    EXPECT_TRUE(bruteForceContainment(withDuty, plain, s).contained);
    const auto r = bruteForceContainment(plain, withDuty, s);
    EXPECT_FALSE(r.contained);
    ASSERT_TRUE(r.counterexample);
    EXPECT_TRUE(isValid(plain, *r.counterexample, s));
    EXPECT_FALSE(isValid(withDuty, *r.counterexample, s));
}

TEST(BruteForce, WorldBudgetIsEnforced) {
    const auto s = sampleSchema();
    CompareOptions tiny;
    tiny.maxWorlds = 1;
    const LitePolicy p({samplePermission(), rule("Bob", "Read", "Book")}, {}, {sampleObligation()});
    EXPECT_EQ(errorCode([&] { bruteForceContainment(p, p, s, tiny); }), "domain-too-large");
}

TEST(ComparatorProperties, ContainmentLaws) {
    const auto r = checkContainmentLaws(41, 150);
    EXPECT_TRUE(r.ok()) << r.firstFailure;
}

TEST(ComparatorProperties, WitnessReplay) {
    const auto r = checkWitnessReplay(42, 200);
    EXPECT_TRUE(r.ok()) << r.firstFailure;
}

TEST(ComparatorProperties, ConflictAgreesWithOracles) {
    const auto r = checkConflictRandom(43, 150);
    EXPECT_TRUE(r.ok()) << r.firstFailure;
}

TEST(ComparatorProperties, NormalizeIsSound) {
    const auto r = checkNormalizeSoundness(44, 100);
    EXPECT_TRUE(r.ok()) << r.firstFailure;
}
