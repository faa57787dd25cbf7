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

#include <odrl/query_emitter.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace odrl;
using namespace odrl::test;

namespace {

std::vector<std::string> sorted(std::vector<std::optional<std::string>> column) {
    std::vector<std::string> out;
    for (auto& v : column) out.push_back(v.value_or("NULL"));
    std::sort(out.begin(), out.end());
    return out;
}

}// namespace

TEST(QueryEmitter, SanitizesColumnNames) {
    EXPECT_EQ(sanitizeColumnName("Book.Pages"), "book_pages");
    EXPECT_EQ(sanitizeColumnName("Datetime"), "datetime");
    EXPECT_EQ(sanitizeColumnName("a-b c"), "a_b_c");
}

TEST(QueryEmitter, ColumnCollisionIsRejected) {
    auto decls = sampleSchema().features();
    FeatureDecl clash;
    clash.id = decls.size();
    clash.name = "Book_Pages";
    clash.datatype = Datatype::Numeric;
    clash.component = ComponentRef::feature(kAsset);
    decls.push_back(clash);
    const FeatureSchema s(decls);
    try {
        emitViolationQueries(samplePolicy(), s);
        FAIL() << "expected column-collision";
    } catch (const EmitError& e) {
        EXPECT_EQ(e.code(), "column-collision");
    }
}

TEST(QueryEmitter, DdlDeclaresEveryFeature) {
    const auto ddl = emitWorldDdl(sampleSchema());
    for (const char* c : {"event_id", "datetime", "action", "actor", "asset", "print_resolution", "book_pages"})
        EXPECT_NE(ddl.find(c), std::string::npos) << c;
    EXPECT_NE(ddl.find("world_sets"), std::string::npos);
}

TEST(QueryEmitter, SamplePolicyRows) {
    const auto s = sampleSchema();
    const auto q = emitViolationQueries(samplePolicy(), s);
    EXPECT_EQ(q.dialect, "ansi-sql");
    EXPECT_TRUE(q.extraClauses.empty());
    SqliteWorld db(sampleWorld(), s);
    EXPECT_EQ(sorted(db.column(q.permissions, "datetime")), (std::vector<std::string>{"2", "3"}));
    EXPECT_TRUE(db.query(q.prohibitions).empty());
    EXPECT_TRUE(db.query(q.obligations).empty());
}

TEST(QueryEmitter, UnfulfilledObligationIsNamed) {
    const auto s = sampleSchema();
    const LitePolicy p({}, {}, {rule("Carol", "Read", "Book", {}, "carol-reads")});
    SqliteWorld db(sampleWorld(), s);
    EXPECT_EQ(sorted(db.column(emitViolationQueries(p, s).obligations, "obligation")),
              std::vector<std::string>{"carol-reads"});
}

TEST(QueryEmitter, EmptyPermissionSetSelectsEveryRow) {
    const auto s = sampleSchema();
    SqliteWorld db(sampleWorld(), s);
    EXPECT_EQ(db.query(emitViolationQueries(LitePolicy(), s).permissions).size(), sampleWorld().size());
    EXPECT_TRUE(db.query(emitViolationQueries(LitePolicy(), s).prohibitions).empty());
}

TEST(QueryEmitter, IsDeterministic) {
    const auto s = sampleSchema();
    const auto a = emitViolationQueries(samplePolicy(), s);
    const auto b = emitViolationQueries(samplePolicy(), s);
    EXPECT_EQ(a.ddl, b.ddl);
    EXPECT_EQ(a.permissions, b.permissions);
    EXPECT_EQ(a.prohibitions, b.prohibitions);
    EXPECT_EQ(a.obligations, b.obligations);
    EXPECT_EQ(emitWorldInserts(sampleWorld(), s), emitWorldInserts(sampleWorld(), s));
}

TEST(QueryEmitter, NegationAgreesWithEngineOnNulls) {
    const auto s = sampleSchema();
    const auto lowRes = rule("Alice", "Print", "Picture", {!Condition(cond(kResolution, Operator::Gt, num(400)))});
    const World w({event(1, "Print", "Alice", "Picture"), event(2, "Print", "Alice", "Picture", 300),
                   event(3, "Print", "Alice", "Picture", 500)});
    SqliteWorld db(w, s);
    const auto q = emitViolationQueries(LitePolicy({}, {lowRes}, {}), s);
    EXPECT_EQ(sorted(db.column(q.prohibitions, "datetime")), (std::vector<std::string>{"1", "2"}));
}

TEST(QueryEmitter, FullPolicyAddsTupleClauses) {
    const auto s = sampleSchema();
    const auto print = rule("Alice", "Print", "Book", {}, "print");
    const auto read = rule("Bob", "Read", "Book", {}, "read");
    const FullPolicy p(LitePolicy({print, read}, {}, {}), {{print, read}});
    const auto q = emitViolationQueries(p, s);
    std::vector<std::string> names;
    for (const auto& [name, sql] : q.extraClauses) names.push_back(name);
    EXPECT_EQ(names, (std::vector<std::string>{"permission-duties", "permission-duties-with-consequences",
                                               "prohibition-remedies", "obligation-consequences"}));
    SqliteWorld db(World({event(1, "Print", "Alice", "Book")}), s);
    EXPECT_EQ(sorted(db.column(q.extraClauses[0].second, "tuple_index")), std::vector<std::string>{"0"});
    SqliteWorld fulfilled(World({event(1, "Read", "Bob", "Book"), event(2, "Print", "Alice", "Book")}), s);
    EXPECT_TRUE(fulfilled.query(q.extraClauses[0].second).empty());
}

TEST(QueryEmitterProperties, LiteDifferential) {
    const auto r = checkSqlDifferential(51, 150);
    EXPECT_TRUE(r.ok()) << r.firstFailure;
}

TEST(QueryEmitterProperties, FullDifferential) {
    const auto r = checkSqlDifferential(52, 100, true);
    EXPECT_TRUE(r.ok()) << r.firstFailure;
}
