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

#include <odrl/model.hpp>

#include <cstdint>
#include <string>

namespace odrl::test {

/// Outcome of a randomized or exhaustive property check.
struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string firstFailure;
    double seconds = 0;

    bool ok() const { return cases > 0 && failures == 0; }
    void fail(const std::string& message);
    /// Merges another result's counts into this one.
    void absorb(const PropertyResult& other);
};

PropertyResult checkNullDominance(std::uint64_t seed, std::size_t cases);
/// The library evaluator agrees with the reference evaluator on random conditions.
PropertyResult checkEvalAgreement(std::uint64_t seed, std::size_t cases);
PropertyResult checkMatchImpliesSoftmatch(std::uint64_t seed, std::size_t cases);
/// Reflexivity, transitivity, agreement with the grid oracle, witness validity, overlap symmetry.
PropertyResult checkContainmentLaws(std::uint64_t seed, std::size_t cases);
PropertyResult checkXorDesugaring(std::uint64_t seed, std::size_t cases);
/// Policies (native format), worlds (CSV) and schemas survive serialize/parse.
PropertyResult checkRoundTrip(std::uint64_t seed, std::size_t cases);
/// Every failure of every verdict carries a world valid for one side and violating the other.
PropertyResult checkWitnessReplay(std::uint64_t seed, std::size_t cases);
/// evaluateFull agrees with the reference evaluation of every clause.
PropertyResult checkFullEvaluation(std::uint64_t seed, std::size_t cases);

/// Asymmetric conflict against the brute-force oracle and the reference oracle,
/// over every pair of consistent policies built from small rule atoms.
PropertyResult checkConflictSweep();
/// Same agreement over random consistent pairs with numeric refinements.
PropertyResult checkConflictRandom(std::uint64_t seed, std::size_t cases);

/// Normalized policies are consistent and agree with their input on every
/// world of at most |O| + 2 signature representatives.
PropertyResult checkNormalizeSoundness(std::uint64_t seed, std::size_t cases);

/// Emitted queries executed on SQLite agree clause by clause with evaluateLite
/// (and evaluateFull for the tuple clauses when `full`).
PropertyResult checkSqlDifferential(std::uint64_t seed, std::size_t cases, bool full = false);

}// namespace odrl::test
