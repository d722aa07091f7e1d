#include "folia/report.hpp"

#include <sstream>

namespace folia {

Report::Report(const std::string& command, std::uint64_t seed) {
    body_ = nlohmann::json::object();
    body_["schema_version"] = kSchemaVersion;
    body_["command"] = command;
    body_["seed"] = seed;
}

void Report::set_inputs(const nlohmann::json& inputs) {
    body_["inputs"] = inputs;
    body_["digest"] = digest_hex(inputs);
}

std::string Report::emit_json() const {
    // nlohmann::json objects already iterate in sorted key order.
    return body_.dump(2) + "\n";
}

static std::string csv_cell(const nlohmann::json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    bool quote = s.find_first_of(",\"\n") != std::string::npos;
    if (!quote) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string Report::emit_csv() const {
    std::ostringstream os;
    if (!body_.contains("rows") || !body_["rows"].is_array() || body_["rows"].empty())
        return "";
    const auto& rows = body_["rows"];
    bool first = true;
    for (const auto& [key, val] : rows[0].items()) {
        if (!first) os << ',';
        os << csv_cell(key);
        first = false;
    }
    os << '\n';
    for (const auto& row : rows) {
        first = true;
        for (const auto& [key, val] : row.items()) {
            if (!first) os << ',';
            os << csv_cell(val);
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

std::string digest_hex(const nlohmann::json& j) {
    const std::string s = j.dump(); // sorted keys, canonical
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (i * 4)) & 0xf);
    return os.str();
}

} // namespace folia
