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

#include <odrl/event.hpp>
#include <odrl/rule.hpp>
#include <odrl/schema.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace odrl {

/// Relational encoding of a policy's violation clauses (ANSI SQL:1999 subset).
///
/// The world is stored in table `world` with an `event_id` key and one column
/// per feature. Column names are feature names lower-cased with every
/// non-alphanumeric character replaced by '_'. Identifier-set features hold a
/// non-null marker (1) in `world` and their members in
/// `world_sets(event_id, feature, member)`, where `feature` is the column name.
///
/// Every emitted leaf predicate is two-valued: null columns and incomparable
/// constants yield FALSE rather than UNKNOWN, so negation behaves like the engine.
struct EmittedQuery {
    std::string dialect = "ansi-sql";
    std::string ddl;
    /// Rows of events no permission matches.
    std::string permissions;
    /// Rows of events some prohibition matches.
    std::string prohibitions;
    /// One `obligation` row per unfulfilled obligation.
    std::string obligations;
    /// Present for full policies: permission-duties, permission-duties-with-consequences,
    /// prohibition-remedies, obligation-consequences. Each yields a `tuple_index` column.
    std::vector<std::pair<std::string, std::string>> extraClauses;
};

std::string sanitizeColumnName(std::string_view featureName);

/// Throws EmitError "column-collision" if two features sanitize to the same column.
EmittedQuery emitViolationQueries(const LitePolicy& policy, const FeatureSchema& schema);
EmittedQuery emitViolationQueries(const FullPolicy& policy, const FeatureSchema& schema);

/// CREATE TABLE statements for `world` and `world_sets`.
std::string emitWorldDdl(const FeatureSchema& schema);

/// INSERT statements materialising `world`; event ids follow world order starting at 1.
std::string emitWorldInserts(const World& world, const FeatureSchema& schema);

/// Predicate text for a rule over table alias `alias`.
std::string emitRulePredicate(const EventRule& rule, const FeatureSchema& schema, std::string_view alias);

}// namespace odrl
