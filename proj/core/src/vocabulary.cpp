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

#include <odrl/error.hpp>
#include <odrl/vocabulary.hpp>

#include <functional>

namespace odrl {

ActionVocabulary::ActionVocabulary(std::vector<std::pair<std::string, std::string>> includedIn)
    : edges_(std::move(includedIn)) {
    std::map<std::string, std::vector<std::string>> parents;
    for (const auto& [child, parent] : edges_) {
        children_[parent].push_back(child);
        parents[child].push_back(parent);
    }
    // Depth-first cycle detection over parent links.
    enum class Mark { None, Active, Done };
    std::map<std::string, Mark> mark;
    std::function<void(const std::string&)> visit = [&](const std::string& a) {
        auto& m = mark[a];
        if (m == Mark::Done) return;
        if (m == Mark::Active) throw PolicyError("cyclic-vocabulary", "action '" + a + "' is included in itself");
        m = Mark::Active;
        if (auto it = parents.find(a); it != parents.end())
            for (const auto& p : it->second) visit(p);
        mark[a] = Mark::Done;
    };
    for (const auto& [child, parent] : edges_) visit(child);
}

std::set<std::string> ActionVocabulary::subActions(const std::string& action) const {
    std::set<std::string> out{action};
    std::vector<std::string> stack{action};
    while (!stack.empty()) {
        auto a = std::move(stack.back());
        stack.pop_back();
        auto it = children_.find(a);
        if (it == children_.end()) continue;
        for (const auto& c : it->second)
            if (out.insert(c).second) stack.push_back(c);
    }
    return out;
}

}// namespace odrl
