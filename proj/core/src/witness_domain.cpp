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

#include <odrl/compare/witness_domain.hpp>
#include <odrl/error.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace odrl {

namespace {

struct Mentions {
    bool used = false;
    std::set<Value> constants;
    /// Identifier members relevant to an identifier-set feature.
    std::set<std::string> members;
};

void collect(const SimpleCondition& s, const FeatureSchema& schema, std::vector<Mentions>& out) {
    if (!schema.contains(s.feature())) return;
    auto& m = out[s.feature()];
    m.used = true;
    if (s.op() == Operator::IsA) {
        const auto& decl = schema.feature(s.feature());
        if (decl.classFeature) {
            auto& cls = out[*decl.classFeature];
            cls.used = true;
            if (const auto* v = std::get_if<Identifier>(&s.value())) cls.members.insert(v->value);
        }
        return;
    }
    auto add = [&](const Value& v) {
        if (const auto* set = std::get_if<IdentifierSet>(&v)) m.members.insert(set->members.begin(), set->members.end());
        else if (const auto* atom = std::get_if<Identifier>(&v)) m.members.insert(atom->value);
        m.constants.insert(v);
    };
    if (s.hasSetOperand())
        for (const auto& v : s.values()) add(v);
    else
        add(s.value());
}

std::vector<Value> timestampProbes(const std::set<Value>& constants, bool temporal) {
    std::set<std::int64_t> c;
    for (const auto& v : constants)
        if (const auto* t = std::get_if<Timestamp>(&v)) c.insert(t->ticks);
    std::set<std::int64_t> out;
    constexpr auto lo = std::numeric_limits<std::int64_t>::min();
    constexpr auto hi = std::numeric_limits<std::int64_t>::max();
    if (c.empty()) {
        out.insert(0);
        if (temporal) out.insert({1, 2});
    } else {
        if (*c.begin() != lo) out.insert(*c.begin() - 1);
        if (*c.rbegin() != hi) out.insert(*c.rbegin() + 1);
        std::optional<std::int64_t> prev;
        for (auto t : c) {
            out.insert(t);
            if (prev && t - *prev >= 2) out.insert(*prev + 1);
            if (temporal) {
                if (t > lo + 1) out.insert({t - 1, t - 2});
                if (t < hi - 1) out.insert({t + 1, t + 2});
            }
            prev = t;
        }
    }
    std::vector<Value> probes;
    for (auto t : out) probes.push_back(ts(t));
    return probes;
}

std::vector<Value> numericProbes(const std::set<Value>& constants) {
    std::vector<double> c;
    for (const auto& v : constants)
        if (const auto* n = std::get_if<Number>(&v)) c.push_back(n->value);
    if (c.empty()) return {num(0)};
    std::set<double> out(c.begin(), c.end());
    auto below = c.front() - 1;
    auto above = c.back() + 1;
    if (std::isfinite(below) && below < c.front()) out.insert(below);
    if (std::isfinite(above) && above > c.back()) out.insert(above);
    for (std::size_t i = 1; i < c.size(); ++i) {
        const double mid = c[i - 1] / 2 + c[i] / 2;
        if (mid > c[i - 1] && mid < c[i]) out.insert(mid);
    }
    std::vector<Value> probes;
    for (auto d : out) probes.push_back(num(d));
    return probes;
}

std::vector<Value> textProbes(const std::set<Value>& constants) {
    std::vector<std::string> c;
    for (const auto& v : constants)
        if (const auto* t = std::get_if<Text>(&v)) c.push_back(t->value);
    if (c.empty()) return {text("")};
    std::set<std::string> out(c.begin(), c.end());
    out.insert("");
    out.insert(c.back() + "~");
    for (std::size_t i = 1; i < c.size(); ++i) {
        auto next = c[i - 1] + std::string(1, '\0');
        if (next < c[i]) out.insert(std::move(next));
    }
    std::vector<Value> probes;
    for (auto& s : out) probes.push_back(text(s));
    return probes;
}

std::string freshAtom(const std::set<std::string>& taken) {
    std::string fresh = "_fresh";
    while (taken.contains(fresh)) fresh += "_";
    return fresh;
}

std::vector<Value> identifierProbes(const Mentions& m) {
    std::vector<Value> probes;
    for (const auto& v : m.constants)
        if (std::holds_alternative<Identifier>(v)) probes.push_back(v);
    probes.push_back(id(freshAtom(m.members)));
    return probes;
}

std::vector<Value> setProbes(const Mentions& m, std::size_t maxUniverse) {
    std::vector<std::string> universe(m.members.begin(), m.members.end());
    universe.push_back(freshAtom(m.members));
    if (universe.size() > maxUniverse)
        throw ComparisonError("domain-too-large", "identifier-set universe of " + std::to_string(universe.size()) +
                                                      " members exceeds " + std::to_string(maxUniverse));
    std::vector<Value> probes;
    const std::size_t count = std::size_t{1} << universe.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::set<std::string> s;
        for (std::size_t b = 0; b < universe.size(); ++b)
            if (mask & (std::size_t{1} << b)) s.insert(universe[b]);
        probes.push_back(idset(std::move(s)));
    }
    return probes;
}

}// namespace

WitnessDomain::WitnessDomain(const FeatureSchema& schema, std::span<const EventRule* const> rules,
                             WitnessDomainOptions options)
    : schema_(&schema), probes_(schema.size()) {
    std::vector<Mentions> mentions(schema.size());
    for (const EventRule* r : rules)
        for (const auto* list : {&r->conditions(), &r->residual()})
            for (const auto& c : *list) c.forEachSimple([&](const SimpleCondition& s) { collect(s, schema, mentions); });

    for (FeatureId f = 0; f < schema.size(); ++f) {
        auto& p = probes_[f];
        const auto& m = mentions[f];
        if (f == kDatetimeFeature) {
            p = timestampProbes(m.constants, options.temporalProbes);
            continue;
        }
        if (f == kActionFeature) {
            p = identifierProbes(m);
            continue;
        }
        if (!m.used) {
            p.push_back(Value{Null{}});
            continue;
        }
        switch (schema.feature(f).datatype) {
            case Datatype::Timestamp: {
                auto t = timestampProbes(m.constants, options.temporalProbes);
                p.insert(p.end(), t.begin(), t.end());
                break;
            }
            case Datatype::Numeric: {
                auto n = numericProbes(m.constants);
                p.insert(p.end(), n.begin(), n.end());
                break;
            }
            case Datatype::String: {
                auto s = textProbes(m.constants);
                p.insert(p.end(), s.begin(), s.end());
                break;
            }
            case Datatype::Identifier: {
                auto i = identifierProbes(m);
                p.insert(p.end(), i.begin(), i.end());
                break;
            }
            case Datatype::IdentifierSet: {
                auto s = setProbes(m, options.maxSetUniverse);
                p.insert(p.end(), s.begin(), s.end());
                break;
            }
        }
        p.push_back(Value{Null{}});
    }
}

std::size_t WitnessDomain::productSize(const std::vector<std::vector<Value>>& lists) {
    std::size_t total = 1;
    for (const auto& l : lists) {
        if (l.empty()) return 0;
        if (total > std::numeric_limits<std::size_t>::max() / l.size()) return std::numeric_limits<std::size_t>::max();
        total *= l.size();
    }
    return total;
}

std::size_t WitnessDomain::productSize() const { return productSize(probes_); }

std::vector<std::vector<Value>> WitnessDomain::restrictedTo(const EventRule& rule) const {
    auto lists = probes_;
    for (const auto* list : {&rule.conditions(), &rule.residual()})
        for (const auto& c : *list) {
            if (!dependsOnSingleFeature(c, *schema_)) continue;
            const FeatureId f = *c.features().begin();
            if (f >= lists.size()) continue;
            auto& l = lists[f];
            l.erase(std::remove_if(l.begin(), l.end(), [&](const Value& v) { return !evalOnValue(c, v, *schema_); }),
                    l.end());
        }
    return lists;
}

}// namespace odrl
