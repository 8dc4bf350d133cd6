// JSON report emission. Reports keep insertion order and serialize every
// floating-point value with 17 significant digits so that values round-trip
// exactly.
#pragma once

#include <json.hpp>

#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

namespace distspec {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string double17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void dump17(const Json& j, std::ostream& os, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ",\n";
                first = false;
                os << pad_in << Json(it.key()).dump() << ": ";
                dump17(it.value(), os, indent, depth + 1);
            }
            os << '\n' << pad << '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            os << "[\n";
            bool first = true;
            for (const auto& e : j) {
                if (!first) os << ",\n";
                first = false;
                os << pad_in;
                dump17(e, os, indent, depth + 1);
            }
            os << '\n' << pad << ']';
            return;
        }
        case Json::value_t::number_float:
            os << double17(j.get<double>());
            return;
        default:
            os << j.dump();
            return;
    }
}

} // namespace detail

inline void write_json(const Json& j, std::ostream& os, int indent = 2) {
    detail::dump17(j, os, indent, 0);
    os << '\n';
}

inline std::string json_to_string(const Json& j, int indent = 2) {
    std::ostringstream ss;
    write_json(j, ss, indent);
    return ss.str();
}

} // namespace distspec
