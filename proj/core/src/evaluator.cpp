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

#include <odrl/evaluator.hpp>
#include <odrl/matcher.hpp>

#include <algorithm>
#include <array>

namespace odrl {

namespace {

constexpr std::array<std::pair<Clause, std::string_view>, 7> kClauseNames{{
    {Clause::Permissions, "permissions"},
    {Clause::Prohibitions, "prohibitions"},
    {Clause::Obligations, "obligations"},
    {Clause::PermissionDuties, "permission-duties"},
    {Clause::PermissionDutiesWithConsequences, "permission-duties-with-consequences"},
    {Clause::ProhibitionRemedies, "prohibition-remedies"},
    {Clause::ObligationConsequences, "obligation-consequences"},
}};

using EventRefs = std::vector<const Event*>;

EventRefs refsOf(const World& w) {
    EventRefs out;
    out.reserve(w.size());
    for (const auto& e : w) out.push_back(&e);
    return out;
}

std::string indexed(const char* kind, std::size_t i) { return std::string(kind) + "[" + std::to_string(i) + "]"; }

/// Exists e' in world with match(rule, e') and `when(e')`.
template<typename Pred>
bool exists(std::span<const Event* const> world, const EventRule& rule, const FeatureSchema& schema, Pred when) {
    return std::any_of(world.begin(), world.end(),
                       [&](const Event* e) { return when(*e) && matchUnchecked(rule, *e, schema); });
}

bool anyTime(const Event&) { return true; }

void validateLite(const LitePolicy& p, const FeatureSchema& schema) {
    for (std::size_t i = 0; i < p.permissions().size(); ++i)
        requireWellFormed(p.permissions()[i], schema, displayName(p.permissions()[i], indexed("permission", i)));
    for (std::size_t i = 0; i < p.prohibitions().size(); ++i)
        requireWellFormed(p.prohibitions()[i], schema, displayName(p.prohibitions()[i], indexed("prohibition", i)));
    for (std::size_t i = 0; i < p.obligations().size(); ++i)
        requireWellFormed(p.obligations()[i], schema, displayName(p.obligations()[i], indexed("obligation", i)));
}

void validateFull(const FullPolicy& p, const FeatureSchema& schema) {
    validateLite(p.lite(), schema);
    for (const auto* r : p.allRules()) requireWellFormed(*r, schema);
}

// Clause predicates shared by the reporting and the short-circuit paths.

bool dutyMissing(std::span<const Event* const> w, const DutyPair& t, const Event& e, const FeatureSchema& s) {
    return !exists(w, t.duty, s, [&](const Event& d) { return d.timestamp() <= e.timestamp(); });
}

bool dutyWithConsequenceMissing(std::span<const Event* const> w, const DutyConsequence& t, const Event& e,
                                const FeatureSchema& s) {
    const auto ts = e.timestamp();
    if (exists(w, t.duty, s, [&](const Event& d) { return d.timestamp() <= ts; })) return false;
    const bool laterDuty = exists(w, t.duty, s, [&](const Event& d) { return ts <= d.timestamp(); });
    const bool laterConsequence = exists(w, t.consequence, s, [&](const Event& c) { return ts <= c.timestamp(); });
    return !laterDuty || !laterConsequence;
}

bool remedyMissing(std::span<const Event* const> w, const RemedyPair& t, const Event& e, const FeatureSchema& s) {
    return !exists(w, t.remedy, s, [&](const Event& r) { return r.timestamp() >= e.timestamp(); });
}

/// Deadline t for which the obligation-consequence clause fires, if any.
std::optional<std::int64_t> obligationConsequenceBreach(std::span<const Event* const> w,
                                                        const ObligationConsequence& t, const EventRule& soft,
                                                        const FeatureSchema& s) {
    if (exists(w, t.obligation, s, anyTime)) return std::nullopt;
    const bool late = exists(w, soft, s, anyTime);
    for (auto deadline : deadlinesOf(t.obligation)) {
        const bool consequence = exists(w, t.consequence, s, [&](const Event& c) { return c.timestamp() >= deadline; });
        if (!(late && consequence)) return deadline;
    }
    return std::nullopt;
}

void sortFindings(std::vector<Finding>& findings) {
    std::stable_sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        if (a.clause != b.clause) return a.clause < b.clause;
        if (a.rules != b.rules) return a.rules < b.rules;
        auto ts = [](const Finding& f) { return f.witnesses.empty() ? INT64_MIN : f.witnesses.front().timestamp(); };
        return ts(a) < ts(b);
    });
}

void addLiteFindings(const LitePolicy& p, std::span<const Event* const> w, const FeatureSchema& s,
                     ViolationReport& report) {
    for (const Event* e : w) {
        const bool permitted = std::any_of(p.permissions().begin(), p.permissions().end(),
                                           [&](const EventRule& r) { return matchUnchecked(r, *e, s); });
        if (!permitted) report.findings.push_back({Clause::Permissions, {}, {*e}, "no permission matches the event"});
        for (std::size_t i = 0; i < p.prohibitions().size(); ++i)
            if (matchUnchecked(p.prohibitions()[i], *e, s))
                report.findings.push_back(
                    {Clause::Prohibitions, {displayName(p.prohibitions()[i], indexed("prohibition", i))}, {*e}, {}});
    }
    for (std::size_t i = 0; i < p.obligations().size(); ++i) {
        const auto& o = p.obligations()[i];
        const auto name = displayName(o, indexed("obligation", i));
        std::vector<Event> witnesses;
        for (const Event* e : w)
            if (matchUnchecked(o, *e, s)) witnesses.push_back(*e);
        if (witnesses.empty())
            report.findings.push_back({Clause::Obligations, {name}, {}, "no event matches the obligation"});
        else
            report.fulfilled.push_back({name, std::move(witnesses)});
    }
}

}// namespace

std::string_view toString(Clause c) {
    for (auto [k, n] : kClauseNames)
        if (k == c) return n;
    return "?";
}

std::vector<const Finding*> ViolationReport::of(Clause c) const {
    std::vector<const Finding*> out;
    for (const auto& f : findings)
        if (f.clause == c) out.push_back(&f);
    return out;
}

ViolationReport evaluateLite(const LitePolicy& policy, const World& world, const FeatureSchema& schema) {
    requireConforms(world, schema);
    validateLite(policy, schema);
    ViolationReport report;
    const auto w = refsOf(world);
    addLiteFindings(policy, w, schema, report);
    sortFindings(report.findings);
    return report;
}

ViolationReport evaluateFull(const FullPolicy& policy, const World& world, const FeatureSchema& schema) {
    requireConforms(world, schema);
    validateFull(policy, schema);
    ViolationReport report;
    const auto w = refsOf(world);
    addLiteFindings(policy.lite(), w, schema, report);

    for (std::size_t i = 0; i < policy.duties().size(); ++i) {
        const auto& t = policy.duties()[i];
        std::vector<std::string> names{displayName(t.permission, indexed("duty", i) + ".permission"),
                                       displayName(t.duty, indexed("duty", i) + ".duty")};
        for (const Event* e : w)
            if (matchUnchecked(t.permission, *e, schema) && dutyMissing(w, t, *e, schema))
                report.findings.push_back({Clause::PermissionDuties, names, {*e}, "no duty event at or before the permission"});
    }
    for (std::size_t i = 0; i < policy.dutiesWithConsequence().size(); ++i) {
        const auto& t = policy.dutiesWithConsequence()[i];
        const auto base = indexed("dutyWithConsequence", i);
        std::vector<std::string> names{displayName(t.permission, base + ".permission"),
                                       displayName(t.duty, base + ".duty"),
                                       displayName(t.consequence, base + ".consequence")};
        for (const Event* e : w)
            if (matchUnchecked(t.permission, *e, schema) && dutyWithConsequenceMissing(w, t, *e, schema))
                report.findings.push_back({Clause::PermissionDutiesWithConsequences, names, {*e},
                                           "duty skipped and not made good by a later duty and consequence"});
    }
    for (std::size_t i = 0; i < policy.remedies().size(); ++i) {
        const auto& t = policy.remedies()[i];
        std::vector<std::string> names{displayName(t.prohibition, indexed("remedy", i) + ".prohibition"),
                                       displayName(t.remedy, indexed("remedy", i) + ".remedy")};
        for (const Event* e : w)
            if (matchUnchecked(t.prohibition, *e, schema) && remedyMissing(w, t, *e, schema))
                report.findings.push_back({Clause::ProhibitionRemedies, names, {*e}, "no remedy event at or after the violation"});
    }
    for (std::size_t i = 0; i < policy.obligationConsequences().size(); ++i) {
        const auto& t = policy.obligationConsequences()[i];
        const auto soft = withoutDeadlines(t.obligation);
        if (auto deadline = obligationConsequenceBreach(w, t, soft, schema)) {
            std::vector<std::string> names{
                displayName(t.obligation, indexed("obligationConsequence", i) + ".obligation"),
                displayName(t.consequence, indexed("obligationConsequence", i) + ".consequence")};
            report.findings.push_back({Clause::ObligationConsequences, names, {},
                                       "obligation not met by " + std::to_string(*deadline) +
                                           " and no late fulfilment with a consequence at or after it"});
        }
    }
    sortFindings(report.findings);
    return report;
}

namespace detail {

bool liteViolated(const LitePolicy& p, std::span<const Event* const> w, const FeatureSchema& s) {
    for (const Event* e : w) {
        bool permitted = false;
        for (const auto& r : p.permissions())
            if (matchUnchecked(r, *e, s)) {
                permitted = true;
                break;
            }
        if (!permitted) return true;
        for (const auto& r : p.prohibitions())
            if (matchUnchecked(r, *e, s)) return true;
    }
    for (const auto& o : p.obligations())
        if (!exists(w, o, s, anyTime)) return true;
    return false;
}

bool fullViolated(const FullPolicy& p, std::span<const Event* const> w, const FeatureSchema& s) {
    if (liteViolated(p.lite(), w, s)) return true;
    for (const Event* e : w) {
        for (const auto& t : p.duties())
            if (matchUnchecked(t.permission, *e, s) && dutyMissing(w, t, *e, s)) return true;
        for (const auto& t : p.dutiesWithConsequence())
            if (matchUnchecked(t.permission, *e, s) && dutyWithConsequenceMissing(w, t, *e, s)) return true;
        for (const auto& t : p.remedies())
            if (matchUnchecked(t.prohibition, *e, s) && remedyMissing(w, t, *e, s)) return true;
    }
    for (const auto& t : p.obligationConsequences())
        if (obligationConsequenceBreach(w, t, withoutDeadlines(t.obligation), s)) return true;
    return false;
}

}// namespace detail

bool isValid(const LitePolicy& policy, const World& world, const FeatureSchema& schema) {
    requireConforms(world, schema);
    validateLite(policy, schema);
    return !detail::liteViolated(policy, refsOf(world), schema);
}

bool isValid(const FullPolicy& policy, const World& world, const FeatureSchema& schema) {
    requireConforms(world, schema);
    validateFull(policy, schema);
    return !detail::fullViolated(policy, refsOf(world), schema);
}

}// namespace odrl
