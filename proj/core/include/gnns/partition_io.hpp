#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gnns {

/// `node_label,community` rows in node order, with a header line.
void write_partition_csv(std::ostream& out, std::span<const std::string> node_labels,
                         std::span<const int> labels);
void write_partition_csv(const std::filesystem::path& path,
                         std::span<const std::string> node_labels, std::span<const int> labels);

/// Reads a `node_label,community` file; a header row is detected and skipped.
/// Throws ParseError on a malformed row and DataError on a repeated label.
std::vector<std::pair<std::string, int>> read_partition_csv(const std::filesystem::path& path);

/// Splits one CSV record; double-quoted fields may contain commas and "".
std::vector<std::string> split_csv_record(const std::string& line);
std::string csv_escape(const std::string& field);

}  // namespace gnns
