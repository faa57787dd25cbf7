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
#include "generators.hpp"
#include "reference.hpp"

#include <odrl/comparator.hpp>
#include <odrl/evaluator.hpp>
#include <odrl/io/schema_io.hpp>
#include <odrl/matcher.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace odrl;
using namespace odrl::test;

TEST(Generators, AreDeterministicPerSeed) {
    Generator a(7), b(7);
    for (int i = 0; i < 50; ++i) {
        EXPECT_EQ(a.policy(), b.policy());
        EXPECT_EQ(a.world(4), b.world(4));
    }
}

TEST(Generators, RulesAreWellFormed) {
    Generator g(8, {.numeric = true, .extended = true, .complex = true});
    for (int i = 0; i < 500; ++i) {
        const auto r = g.rule();
        EXPECT_TRUE(checkWellFormed(r, g.schema()).ok());
    }
}

TEST(Generators, ConsistentPoliciesAreConsistent) {
    Generator g(9);
    for (int i = 0; i < 100; ++i) EXPECT_TRUE(isConsistent(g.consistentPolicy(g.schema()), g.schema()));
}

TEST(Generators, EventsConformToSchema) {
    Generator g(10, {.numeric = true, .extended = true});
    for (int i = 0; i < 200; ++i) {
        const auto e = g.event();
        ASSERT_EQ(e.size(), g.schema().size());
        for (FeatureId f = 0; f < e.size(); ++f)
            if (!isNull(e[f])) EXPECT_EQ(io::parseValueText(io::formatValueText(e[f]), g.schema().feature(f).datatype), e[f]);
    }
}

TEST(ReferenceOracle, AgreesWithEngineOnSample) {
    const auto s = sampleSchema();
    const auto outcome = refEvaluateLite(samplePolicy(), sampleWorld(), s);
    EXPECT_EQ(outcome.unpermitted, (std::vector<std::size_t>{1, 2}));
    EXPECT_TRUE(outcome.prohibited.empty());
    EXPECT_TRUE(outcome.unmetObligations.empty());
    EXPECT_EQ(outcome.violated(), !isValid(samplePolicy(), sampleWorld(), s));
}

TEST(ReferenceOracle, GridCoversEveryValueKind) {
    const auto& grid = sampleGrid();
    EXPECT_EQ(grid.size(), 24000u);
    bool sawNullActor = false, sawNullPages = false;
    for (const auto& e : grid) {
        sawNullActor = sawNullActor || isNull(e[kActor]);
        sawNullPages = sawNullPages || isNull(e[kPages]);
    }
    EXPECT_TRUE(sawNullActor);
    EXPECT_TRUE(sawNullPages);
}

TEST(ReferenceOracle, RepresentativesPreserveMatchSignatures) {
    const auto s = sampleSchema();
    const auto p = samplePermission(), f = sampleProhibition(), o = sampleObligation();
    const std::vector<const EventRule*> rules{&p, &f, &o};
    const auto reps = signatureRepresentatives(sampleGrid(), rules, s);
    std::set<std::vector<bool>> all, kept;
    auto signature = [&](const Event& e) {
        std::vector<bool> v;
        for (const auto* r : rules) v.push_back(refMatch(*r, e, s));
        return v;
    };
    for (const auto& e : sampleGrid()) all.insert(signature(e));
    for (const auto& e : reps) kept.insert(signature(e));
    EXPECT_EQ(all, kept);
    EXPECT_EQ(reps.size(), kept.size());
}

TEST(ReferenceOracle, ContainmentMatchesComparatorOnSample) {
    const auto s = sampleSchema();
    const LitePolicy read({rule("Bob", "Read", "Book", {}, "read")}, {}, {});
    const LitePolicy both({rule("Bob", "Read", "Book", {}, "read"), samplePermission()}, {}, {});
    EXPECT_TRUE(refPolicyContained(read, both, s));
    EXPECT_FALSE(refPolicyContained(both, read, s));
    EXPECT_TRUE(refRuleContained(sampleProhibition(), rule("Bob", "Read", "Book"), s));
    EXPECT_FALSE(refRuleContained(rule("Bob", "Read", "Book"), sampleProhibition(), s));
}
