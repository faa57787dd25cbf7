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

#include "generators.hpp"

#include <odrl/query_emitter.hpp>

#include <benchmark/benchmark.h>

using namespace odrl;
using namespace odrl::test;

namespace {

void emitLite(benchmark::State& state) {
    Generator g(8, {.maxPermissions = 8, .maxProhibitions = 4, .maxObligations = 4});
    std::vector<LitePolicy> policies;
    for (int i = 0; i < 32; ++i) policies.push_back(g.policy());
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(emitViolationQueries(policies[i++ % 32], g.schema()));
}
BENCHMARK(emitLite);

void emitFull(benchmark::State& state) {
    Generator g(9, {.maxPermissions = 6, .maxProhibitions = 3, .maxObligations = 3});
    std::vector<FullPolicy> policies;
    for (int i = 0; i < 32; ++i) policies.push_back(g.fullPolicy());
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(emitViolationQueries(policies[i++ % 32], g.schema()));
}
BENCHMARK(emitFull);

}// namespace
