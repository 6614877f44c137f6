#pragma once

// Persistence: GFRecord JSON files and CSV reports with an embedded run
// configuration.
//
// Record schema:
//   { "lattice", "T", "L", "M", "precision", "normalization", "scale_log2",
//     "A": [string], "B": [string], "meta": { "generator", "wall_seconds",
//     "peak_states" } }
// A[n] is the stored coefficient c_n * 2^(scale_log2 * n) as a lossless
// string: an integer (exact), "%.17g" (fast) or "hi+lo" (high).

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sawstrip/strip_enum.hpp"

namespace sawstrip {

using Json = nlohmann::ordered_json;

Json record_to_json(const GFRecord& record);
/// Throws InputError on a malformed document.
GFRecord record_from_json(const Json& doc);

void write_record(const GFRecord& record, const std::filesystem::path& path);
GFRecord read_record(const std::filesystem::path& path);

/// Conventional file name: <lattice>_T<width>_M<max degree>.json.
std::string record_file_name(const StripSpec& spec);

struct Report {
  Json config;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  /// First line "# config: <compact json>", then a header and the rows.
  std::string to_csv() const;
  static Report parse_csv(std::string_view text);
};

void write_text(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

}  // namespace sawstrip
