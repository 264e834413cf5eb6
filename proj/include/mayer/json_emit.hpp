#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace mayer {

using Json = nlohmann::ordered_json;

// Serializes with every float at 17 significant digits; non-finite floats become null.
inline void emit_json(const Json& j, std::string& out, int indent = -1, int depth = 0) {
    auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(std::size_t(indent * d), ' ');
    };
    switch (j.type()) {
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                break;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            break;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                break;
            }
            out += '[';
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                emit_json(e, out, indent, depth + 1);
            }
            newline(depth);
            out += ']';
            break;
        }
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                break;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += Json(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                emit_json(it.value(), out, indent, depth + 1);
            }
            newline(depth);
            out += '}';
            break;
        }
        default: out += j.dump();
    }
}

inline std::string dump17(const Json& j, int indent = -1) {
    std::string out;
    emit_json(j, out, indent);
    return out;
}

}  // namespace mayer
