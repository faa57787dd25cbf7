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

#include <odrl/evaluator.hpp>

#include <benchmark/benchmark.h>

using namespace odrl;
using namespace odrl::test;

namespace {

World randomWorld(Generator& g, std::size_t n) {
    std::vector<Event> events;
    events.reserve(n);
    for (std::size_t i = 0; i < n; ++i) events.push_back(g.event());
    return World(std::move(events));
}

void evaluateLiteSample(benchmark::State& state) {
    Generator g(1);
    const auto world = randomWorld(g, state.range(0));
    const auto policy = samplePolicy();
    for (auto _ : state) benchmark::DoNotOptimize(evaluateLite(policy, world, g.schema()));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(evaluateLiteSample)->RangeMultiplier(4)->Range(16, 4096);

void evaluateLiteRandom(benchmark::State& state) {
    Generator g(2, {.maxPermissions = 8, .maxProhibitions = 4, .maxObligations = 4});
    const auto world = randomWorld(g, state.range(0));
    std::vector<LitePolicy> policies;
    for (int i = 0; i < 32; ++i) policies.push_back(g.policy());
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(evaluateLite(policies[i++ % policies.size()], world, g.schema()));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(evaluateLiteRandom)->RangeMultiplier(4)->Range(16, 4096);

void evaluateFullRandom(benchmark::State& state) {
    Generator g(3, {.maxPermissions = 6, .maxProhibitions = 3, .maxObligations = 3});
    const auto world = randomWorld(g, state.range(0));
    std::vector<FullPolicy> policies;
    for (int i = 0; i < 32; ++i) policies.push_back(g.fullPolicy());
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(evaluateFull(policies[i++ % policies.size()], world, g.schema()));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(evaluateFullRandom)->RangeMultiplier(4)->Range(16, 1024);

}// namespace
