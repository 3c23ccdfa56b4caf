#include "gnns/partition_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <unordered_set>

#include "gnns/errors.hpp"

namespace gnns {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_record(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  return fields;
}

void write_partition_csv(std::ostream& out, std::span<const std::string> node_labels,
                         std::span<const int> labels) {
  if (node_labels.size() != labels.size()) {
    throw DataError("partition and node label counts differ");
  }
  out << "node_label,community\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << csv_escape(node_labels[i]) << ',' << labels[i] << '\n';
  }
}

void write_partition_csv(const std::filesystem::path& path,
                         std::span<const std::string> node_labels, std::span<const int> labels) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  write_partition_csv(out, node_labels, labels);
}

std::vector<std::pair<std::string, int>> read_partition_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open partition file " + path.string());
  std::vector<std::pair<std::string, int>> rows;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_record(line);
    if (fields.size() != 2) {
      throw ParseError(path.string(), line_no, "expected 'node_label,community'");
    }
    int community = 0;
    const std::string& text = fields[1];
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), community);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      if (line_no == 1) continue;  // header
      throw ParseError(path.string(), line_no, "invalid community '" + text + "'");
    }
    if (!seen.insert(fields[0]).second) {
      throw DataError(path.string() + ": node '" + fields[0] + "' listed twice");
    }
    rows.emplace_back(fields[0], community);
  }
  return rows;
}

}  // namespace gnns
