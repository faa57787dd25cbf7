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

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace odrl {

/// Action hierarchy given by "included in" edges (child -> parent).
class ActionVocabulary {
  public:
    ActionVocabulary() = default;
    /// Throws PolicyError "cyclic-vocabulary".
    explicit ActionVocabulary(std::vector<std::pair<std::string, std::string>> includedIn);

    const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }
    bool empty() const { return edges_.empty(); }

    /// Every action a' with a' includedIn* a (reflexive-transitive), including a.
    std::set<std::string> subActions(const std::string& action) const;

  private:
    std::vector<std::pair<std::string, std::string>> edges_;
    std::map<std::string, std::vector<std::string>> children_;
};

}// namespace odrl
