#pragma once

// Run records and their serialization. Every command emits one ResultRecord:
// a JSON envelope {experiment, config, seed, duration_ms, results} or a flat
// CSV table. Identical configuration and seed reproduce the JSON byte for
// byte apart from duration_ms; numbers carry full double precision.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace merminsim {

// Full-precision decimal form (17 significant digits round-trips a double).
std::string format_full(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_text() const;  // header row first, RFC-style quoting
};

// Flat key=value configuration text ('#' comments, blank lines ignored).
struct KvConfig {
  std::map<std::string, std::string> values;

  static KvConfig parse_text(const std::string& text);
  static KvConfig parse_file(const std::string& path);
  std::string to_text() const;
};

struct ResultRecord {
  std::string experiment;
  nlohmann::json config;  // resolved configuration echo
  std::uint64_t seed = 0;
  double duration_ms = 0.0;  // wall clock; excluded from determinism checks
  nlohmann::json results;

  nlohmann::json to_json() const;
  std::string to_json_text() const;  // 2-space indent, trailing newline
};

void write_text_file(const std::string& path, const std::string& text);

}  // namespace merminsim
