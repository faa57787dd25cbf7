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
#include <odrl/value.hpp>

#include <charconv>
#include <cmath>

namespace odrl {

Number::Number(double v) : value(v) {
    if (!std::isfinite(v)) throw PolicyError("invalid-value", "numbers must be finite");
    if (v == 0.0) value = 0.0;// fold -0
}

std::string formatNumber(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string toString(const Value& v) {
    struct Visitor {
        std::string operator()(const Null&) const { return "null"; }
        std::string operator()(const Timestamp& t) const { return std::to_string(t.ticks); }
        std::string operator()(const Number& n) const { return formatNumber(n.value); }
        std::string operator()(const Text& t) const { return '"' + t.value + '"'; }
        std::string operator()(const Identifier& i) const { return i.value; }
        std::string operator()(const IdentifierSet& s) const {
            std::string out = "{";
            bool first = true;
            for (const auto& m : s.members) {
                if (!first) out += ", ";
                out += m;
                first = false;
            }
            return out + "}";
        }
    };
    return std::visit(Visitor{}, v);
}

}// namespace odrl
