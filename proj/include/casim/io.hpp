#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace casim {

/// Locale-independent, 17 significant digits (round-trips exactly).
std::string format_double(double v);

/// FNV-1a 64-bit content hash, hex-encoded; used to tie JSON sidecars to
/// their CSV payloads.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

/// Column-oriented CSV document with `# key: value` comment header lines.
struct CsvTable {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;           // empty for bare matrices
    std::vector<std::vector<double>> rows;

    std::string serialize() const;
};

/// Parses the format written by CsvTable::serialize.
CsvTable parse_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Serializes with sorted keys and a trailing newline; stable across runs.
std::string dump_json(const nlohmann::json& j);

/// Writes `<stem>.csv` plus `<stem>.json`; the sidecar gains a
/// "csv_fnv1a64" integrity field. Returns the csv text's hash.
std::string emit_csv_with_sidecar(const std::string& stem, const CsvTable& table,
                                  nlohmann::json sidecar);

}  // namespace casim
