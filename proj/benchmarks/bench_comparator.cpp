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

#include <odrl/comparator.hpp>

#include <benchmark/benchmark.h>

using namespace odrl;
using namespace odrl::test;

namespace {

void ruleContainsSample(benchmark::State& state) {
    const auto s = sampleSchema();
    const auto narrow = sampleProhibition();
    const auto wide = rule("Bob", "Read", "Book", {cond(kPages, Operator::Gt, num(200))});
    for (auto _ : state) benchmark::DoNotOptimize(ruleContains(narrow, wide, s));
}
BENCHMARK(ruleContainsSample);

void ruleContainsRandom(benchmark::State& state) {
    Generator g(4);
    std::vector<EventRule> rules;
    for (int i = 0; i < 64; ++i) rules.push_back(g.rule());
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ruleContains(rules[i % 64], rules[(i * 7 + 3) % 64], g.schema()));
        ++i;
    }
}
BENCHMARK(ruleContainsRandom);

void asymmetricConflictRandom(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    Generator g(5, {.maxPermissions = size, .maxProhibitions = 1, .maxObligations = size});
    std::vector<LitePolicy> policies;
    for (int i = 0; i < 16; ++i) policies.push_back(g.consistentPolicy(g.schema()));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(asymmetricConflict(policies[i % 16], policies[(i * 5 + 1) % 16], g.schema()));
        ++i;
    }
}
BENCHMARK(asymmetricConflictRandom)->Arg(2)->Arg(4)->Arg(8);

void normalizeRandom(benchmark::State& state) {
    Generator g(6, {.maxPermissions = 3, .maxProhibitions = 2, .maxObligations = 2});
    std::vector<LitePolicy> policies;
    for (int i = 0; i < 16; ++i) policies.push_back(g.policy());
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(normalize(policies[i++ % 16], g.schema()));
}
BENCHMARK(normalizeRandom);

void bruteForceOracle(benchmark::State& state) {
    Generator g(7, {.maxPermissions = 2, .maxProhibitions = 1, .maxObligations = 2});
    std::vector<LitePolicy> policies;
    for (int i = 0; i < 16; ++i) policies.push_back(g.consistentPolicy(g.schema()));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bruteForceContainment(policies[i % 16], policies[(i * 5 + 1) % 16], g.schema()));
        ++i;
    }
}
BENCHMARK(bruteForceOracle)->Unit(benchmark::kMillisecond);

}// namespace
