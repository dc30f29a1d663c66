#include "quartika/records.hpp"

#include <sstream>

#include <json.hpp>

namespace quartika {

std::string to_csv(const OutputRecord& rec) {
    std::ostringstream os;
    os << rec.source << ',' << rec.quad.n << ',' << rec.quad.x << ',' << rec.quad.y << ','
       << rec.quad.z << ',' << rec.quad.w << ',' << rec.meta;
    return os.str();
}

std::string to_json(const OutputRecord& rec) {
    nlohmann::ordered_json j;
    j["source"] = rec.source;
    j["n"] = rec.quad.n.get_str();
    j["x"] = rec.quad.x.get_str();
    j["y"] = rec.quad.y.get_str();
    j["z"] = rec.quad.z.get_str();
    j["w"] = rec.quad.w.get_str();
    j["meta"] = rec.meta;
    return j.dump();
}

std::optional<OutputRecord> from_csv(const std::string& line) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() != 7) return std::nullopt;
    std::optional<Integer> vals[5];
    for (int i = 0; i < 5; ++i) {
        vals[i] = parse_integer(parts[1 + i]);
        if (!vals[i]) return std::nullopt;
    }
    return OutputRecord{parts[0], Quadruple{*vals[0], *vals[1], *vals[2], *vals[3], *vals[4]},
                        parts[6]};
}

std::optional<OutputRecord> from_json(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    const char* keys[] = {"source", "n", "x", "y", "z", "w", "meta"};
    for (const char* k : keys)
        if (!j.contains(k) || !j[k].is_string()) return std::nullopt;
    std::optional<Integer> vals[5];
    const char* nums[] = {"n", "x", "y", "z", "w"};
    for (int i = 0; i < 5; ++i) {
        vals[i] = parse_integer(j[nums[i]].get<std::string>());
        if (!vals[i]) return std::nullopt;
    }
    return OutputRecord{j["source"].get<std::string>(),
                        Quadruple{*vals[0], *vals[1], *vals[2], *vals[3], *vals[4]},
                        j["meta"].get<std::string>()};
}

} // namespace quartika
