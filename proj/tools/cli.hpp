#pragma once

// Command-line front end. Every subcommand writes line-delimited JSON
// records to `out`; diagnostics go to `err`.

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace repetend::cli {

inline constexpr std::string_view kSchemaVersion = "1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable consulted for the seed when --seed is absent.
inline constexpr const char* kSeedEnvVar = "REPETEND_SEED";

/// Record with a result payload.
nlohmann::json result_record(std::string_view command, nlohmann::json inputs,
                             nlohmann::json result);

/// Record with an error payload.
nlohmann::json error_record(std::string_view command, nlohmann::json inputs,
                            std::string_view name, std::string_view message);

/// Canonical single-line form; parsing and re-serializing is byte-identical.
std::string serialize(const nlohmann::json& record);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace repetend::cli
