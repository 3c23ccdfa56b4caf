#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gnns/errors.hpp"
#include "gnns/partition_io.hpp"
#include "paths.hpp"

using namespace gnns;

TEST_CASE("csv fields") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(split_csv_record("a,b") == std::vector<std::string>{"a", "b"});
  CHECK(split_csv_record("\"a,b\",3\r") == std::vector<std::string>{"a,b", "3"});
  CHECK(split_csv_record("\"x\"\"y\",") == std::vector<std::string>{"x\"y", ""});
}

TEST_CASE("partition files round trip") {
  testing_paths::ScratchDir dir("partition");
  const std::vector<std::string> names{"Myriel", "Napoleon, Bonaparte", "M \"Madeleine\""};
  const std::vector<int> labels{0, 1, 0};
  write_partition_csv(dir / "p.csv", names, labels);

  std::ifstream in(dir / "p.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "node_label,community");

  auto rows = read_partition_csv(dir / "p.csv");
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(rows[i].first == names[i]);
    CHECK(rows[i].second == labels[i]);
  }
  std::ostringstream out;
  CHECK_THROWS_AS(write_partition_csv(out, names, std::vector<int>{0}), DataError);
}

TEST_CASE("malformed partition files") {
  testing_paths::ScratchDir dir("partition-bad");
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name) << text;
    return dir / name;
  };
  CHECK(read_partition_csv(write("noheader.csv", "a,1\nb,2\n")).size() == 2);
  CHECK_THROWS_AS(read_partition_csv(write("dup.csv", "node_label,community\na,1\na,2\n")), DataError);
  CHECK_THROWS_AS(read_partition_csv(write("bad.csv", "node_label,community\na,x\n")), ParseError);
  CHECK_THROWS_AS(read_partition_csv(write("cols.csv", "a,1,2\n")), ParseError);
  CHECK_THROWS_AS(read_partition_csv(dir / "missing.csv"), DataError);
}
