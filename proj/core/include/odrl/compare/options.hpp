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

#include <cstddef>

namespace odrl {

struct CompareOptions {
    /// Normalize inconsistent inputs instead of rejecting them.
    bool autoNormalize = false;
    /// Upper bound on probe events enumerated by a single containment/overlap check.
    std::size_t maxProbeEvents = 20'000'000;
    /// Upper bound on rules produced while computing a normalized difference.
    std::size_t maxDisjuncts = 4096;
    /// Upper bound on candidate worlds visited by the brute-force oracle.
    std::size_t maxWorlds = 20'000'000;
    /// Largest identifier-set universe expanded into all subsets.
    std::size_t maxSetUniverse = 12;
};

}// namespace odrl
