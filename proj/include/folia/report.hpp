#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace folia {

// Shared report model. Serialization is canonical: object keys sorted,
// rationals rendered "p/q", no whitespace variance, so identical reports
// emit identical bytes.
class Report {
public:
    static constexpr int kSchemaVersion = 1;

    Report(const std::string& command, std::uint64_t seed);

    nlohmann::json& body() { return body_; }
    const nlohmann::json& body() const { return body_; }

    void set_inputs(const nlohmann::json& inputs); // digest is derived from these

    // Canonical JSON bytes (trailing newline included).
    std::string emit_json() const;

    // CSV: one header row from the keys of body()["rows"][0], then rows.
    std::string emit_csv() const;

private:
    nlohmann::json body_;
};

// FNV-1a over a canonical serialization; stable under key reordering of the
// input object.
std::string digest_hex(const nlohmann::json& j);

} // namespace folia
