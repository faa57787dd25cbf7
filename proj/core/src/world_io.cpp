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
#include <odrl/io/schema_io.hpp>
#include <odrl/io/world_io.hpp>

#include <map>

namespace odrl::io {

namespace {

struct Field {
    std::string text;
    bool quoted = false;
};

/// Splits delimiter-separated text into records. Quoted fields may contain
/// delimiters, doubled quotes and line breaks.
std::vector<std::vector<Field>> splitRecords(std::string_view s, char delimiter) {
    std::vector<std::vector<Field>> records;
    std::vector<Field> record;
    Field field;
    bool inQuotes = false;
    bool any = false;
    auto endField = [&] {
        record.push_back(std::move(field));
        field = {};
    };
    auto endRecord = [&] {
        endField();
        if (!(record.size() == 1 && record.front().text.empty() && !record.front().quoted)) records.push_back(std::move(record));
        record.clear();
        any = false;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (inQuotes) {
            if (c == '"' && i + 1 < s.size() && s[i + 1] == '"') {
                field.text += '"';
                ++i;
            } else if (c == '"') {
                inQuotes = false;
            } else {
                field.text += c;
            }
            continue;
        }
        any = true;
        if (c == '"' && field.text.empty()) {
            inQuotes = true;
            field.quoted = true;
        } else if (c == delimiter) {
            endField();
        } else if (c == '\n') {
            endRecord();
        } else if (c == '\r' && i + 1 < s.size() && s[i + 1] == '\n') {
        } else {
            field.text += c;
        }
    }
    if (inQuotes) throw ParseError("malformed-document", "unterminated quoted field");
    if (any || !record.empty() || !field.text.empty()) endRecord();
    return records;
}

bool needsQuotes(const std::string& s, char delimiter) {
    if (s == "null") return true;
    for (char c : s)
        if (c == delimiter || c == '"' || c == '\n' || c == '\r') return true;
    return false;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}// namespace

World parseWorld(std::string_view text, const FeatureSchema& schema, char delimiter) {
    auto records = splitRecords(text, delimiter);
    if (records.empty()) throw ParseError("header-mismatch", "missing header row", 0);

    const auto& header = records.front();
    std::vector<FeatureId> slot(header.size());
    std::map<FeatureId, std::string> seen;
    for (std::size_t c = 0; c < header.size(); ++c) {
        auto f = schema.findByName(header[c].text);
        if (!f) throw ParseError("header-mismatch", "column '" + header[c].text + "' is not a schema feature", 0, header[c].text);
        if (!seen.emplace(*f, header[c].text).second)
            throw ParseError("header-mismatch", "column '" + header[c].text + "' appears twice", 0, header[c].text);
        slot[c] = *f;
    }
    for (const auto& f : schema.features())
        if (!seen.contains(f.id)) throw ParseError("header-mismatch", "no column for feature '" + f.name + "'", 0, f.name);

    std::vector<Event> events;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& row = records[r];
        if (row.size() != header.size())
            throw ParseError("arity-mismatch",
                             "row " + std::to_string(r) + " has " + std::to_string(row.size()) + " fields, expected " +
                                 std::to_string(header.size()),
                             r);
        std::vector<Value> values(schema.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto& decl = schema.feature(slot[c]);
            std::optional<Value> v;
            if (row[c].quoted && decl.datatype == Datatype::String) v = odrl::text(row[c].text);
            else v = parseValueText(row[c].text, decl.datatype);
            if (v && isNull(*v) && slot[c] <= kActionFeature) v.reset();
            if (!v)
                throw ParseError("unparsable-value",
                                 "row " + std::to_string(r) + ", column '" + decl.name + "': cannot read '" +
                                     row[c].text + "' as " + std::string(toString(decl.datatype)),
                                 r, decl.name);
            values[slot[c]] = std::move(*v);
        }
        events.emplace_back(std::move(values));
    }
    return World(std::move(events));
}

std::string serializeWorld(const World& world, const FeatureSchema& schema, char delimiter) {
    requireConforms(world, schema);
    std::string out;
    for (const auto& f : schema.features()) {
        if (f.id) out += delimiter;
        out += needsQuotes(f.name, delimiter) ? quoted(f.name) : f.name;
    }
    out += '\n';
    for (const auto& e : world) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += delimiter;
            const auto s = formatValueText(e[i]);
            const bool quote = isNull(e[i]) ? false : needsQuotes(s, delimiter) || std::holds_alternative<Text>(e[i]);
            out += quote ? quoted(s) : s;
        }
        out += '\n';
    }
    return out;
}

}// namespace odrl::io
