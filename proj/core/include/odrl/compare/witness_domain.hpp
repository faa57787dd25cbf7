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

#include <odrl/compare/options.hpp>
#include <odrl/condition_eval.hpp>
#include <odrl/event.hpp>
#include <odrl/matcher.hpp>
#include <odrl/rule.hpp>
#include <odrl/schema.hpp>

#include <span>
#include <vector>

namespace odrl {

struct WitnessDomainOptions {
    /// Adds t-1 and t+1 around every timestamp constant, so that relative
    /// ordering between events of a world can be probed.
    bool temporalProbes = false;
    std::size_t maxSetUniverse = 12;
};

/// Finite per-feature probe sets covering every region the given rules can
/// distinguish.
///
/// For ordered datatypes the probes are each constant, one value strictly
/// between adjacent constants (when the datatype has one), one below the
/// minimum and one above the maximum. Identifier features add one fresh atom;
/// identifier-set features take every subset of the mentioned members plus a
/// fresh one. Null is a probe for every feature other than the timestamp and
/// the action, listed last so that first-found witnesses prefer concrete
/// values. Features no rule mentions get a single probe.
///
/// Since each simple condition reads one feature, two events that agree on
/// regions feature-by-feature agree on every condition, so the product of the
/// probe sets is a complete set of representatives.
class WitnessDomain {
  public:
    WitnessDomain(const FeatureSchema& schema, std::span<const EventRule* const> rules,
                  WitnessDomainOptions options = {});

    const FeatureSchema& schema() const { return *schema_; }
    const std::vector<Value>& probes(FeatureId i) const { return probes_[i]; }

    /// Number of events in the full product (saturates at SIZE_MAX).
    std::size_t productSize() const;

    /// Probe lists restricted to values passing the rule's single-feature conditions.
    std::vector<std::vector<Value>> restrictedTo(const EventRule& rule) const;
    static std::size_t productSize(const std::vector<std::vector<Value>>& lists);

    /// Visits the full product in lexicographic probe-index order until `f`
    /// returns false. Returns false iff stopped early.
    template<typename F>
    bool forEach(F&& f) const {
        return odometer(probes_, std::forward<F>(f));
    }

    /// Visits, in lexicographic order, the product events matching `rule`.
    template<typename F>
    bool forEachMatching(const EventRule& rule, F&& f) const {
        auto lists = restrictedTo(rule);
        return odometer(lists, [&](const Event& e) { return !matchUnchecked(rule, e, *schema_) || f(e); });
    }

    template<typename F>
    static bool odometer(const std::vector<std::vector<Value>>& lists, F&& f) {
        for (const auto& l : lists)
            if (l.empty()) return true;
        Event scratch;
        scratch.values_.reserve(lists.size());
        for (const auto& l : lists) scratch.values_.push_back(l.front());
        std::vector<std::size_t> index(lists.size(), 0);
        while (true) {
            if (!f(static_cast<const Event&>(scratch))) return false;
            std::size_t k = lists.size();
            while (k > 0) {
                --k;
                if (++index[k] < lists[k].size()) {
                    scratch.values_[k] = lists[k][index[k]];
                    break;
                }
                index[k] = 0;
                scratch.values_[k] = lists[k][0];
                if (k == 0) return true;
            }
            if (lists.empty()) return true;
        }
    }

  private:
    const FeatureSchema* schema_;
    std::vector<std::vector<Value>> probes_;
};

}// namespace odrl
