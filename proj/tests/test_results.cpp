#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "merminsim/results.hpp"
#include "schema_check.hpp"

using namespace merminsim;

TEST_SUITE("results") {

TEST_CASE("format_full round-trips doubles") {
  for (double v : {1.0 / 3, 0.1, 2.0, -4.375e-12, 1e300, 0.0}) {
    const std::string text = format_full(v);
    CHECK(std::stod(text) == v);
  }
  CHECK(format_full(2.0) == "2");
}

TEST_CASE("csv quoting follows the usual rules") {
  CsvTable table;
  table.header = {"name", "value"};
  table.rows.push_back({"plain", "1"});
  table.rows.push_back({"with,comma", "2"});
  table.rows.push_back({"with\"quote", "3"});
  table.rows.push_back({"with\nnewline", "4"});
  const std::string text = table.to_text();
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "name,value");
  std::getline(lines, line);
  CHECK(line == "plain,1");
  std::getline(lines, line);
  CHECK(line == "\"with,comma\",2");
  std::getline(lines, line);
  CHECK(line == "\"with\"\"quote\",3");
  std::getline(lines, line);
  CHECK(line == "\"with");  // embedded newline keeps the field quoted
  std::getline(lines, line);
  CHECK(line == "newline\",4");
}

TEST_CASE("csv rows must match the header width") {
  CsvTable table;
  table.header = {"a", "b"};
  table.rows.push_back({"1"});
  CHECK_THROWS_AS(table.to_text(), std::invalid_argument);
}

TEST_CASE("config text parses comments, blanks and padding") {
  const std::string text =
      "# run setup\n"
      "\n"
      "n = 4\n"
      "variant=odd-y   # trailing comment\n"
      "  shots\t= 1000 \n";
  const KvConfig config = KvConfig::parse_text(text);
  REQUIRE(config.values.size() == 3);
  CHECK(config.values.at("n") == "4");
  CHECK(config.values.at("variant") == "odd-y");
  CHECK(config.values.at("shots") == "1000");
}

TEST_CASE("config text round-trips through to_text") {
  KvConfig config;
  config.values = {{"n", "3"}, {"seed", "42"}, {"variant", "even-y"}};
  const KvConfig back = KvConfig::parse_text(config.to_text());
  CHECK(back.values == config.values);
}

TEST_CASE("malformed config lines carry line numbers") {
  const auto message_of = [](const std::string& text) -> std::string {
    try {
      KvConfig::parse_text(text);
    } catch (const std::invalid_argument& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message_of("n=1\nn=2\n").find("line 2") != std::string::npos);
  CHECK(message_of("just-a-token\n").find("line 1") != std::string::npos);
  CHECK_THROWS_AS(KvConfig::parse_text("=5\n"), std::invalid_argument);
  CHECK_THROWS_AS(KvConfig::parse_file("/no/such/config.txt"),
                  std::runtime_error);
}

TEST_CASE("records serialize with the five envelope keys") {
  ResultRecord record;
  record.experiment = "mermin";
  record.config = {{"n", "3"}, {"variant", "odd-y"}};
  record.seed = 42;
  record.duration_ms = 1.5;
  record.results = {{"f_exact_sum", 4.0}};

  const nlohmann::json j = record.to_json();
  REQUIRE(j.size() == 5);
  CHECK(j.at("experiment") == "mermin");
  CHECK(j.at("seed") == 42);
  CHECK(j.at("duration_ms") == 1.5);
  CHECK(j.at("results").at("f_exact_sum") == 4.0);

  const std::string text = record.to_json_text();
  CHECK(text.back() == '\n');
  const nlohmann::json parsed = nlohmann::json::parse(text);
  CHECK(parsed == j);
}

TEST_CASE("record envelopes satisfy the published schema") {
  const char* schema_path = std::getenv("MERMINSIM_SCHEMA");
  REQUIRE_MESSAGE(schema_path != nullptr,
                  "MERMINSIM_SCHEMA must point at docs/result-schema.json");
  std::ifstream in(schema_path);
  REQUIRE(in.good());
  const nlohmann::json schema = nlohmann::json::parse(in);

  ResultRecord record;
  record.experiment = "lhv";
  record.config = {{"n", "4"}};
  record.seed = 0;
  record.results = {{"max_f", 4.0}};
  std::vector<std::string> errors;
  CHECK(schema_check::validate(record.to_json(), schema, errors));
  CHECK(errors.empty());

  nlohmann::json broken = record.to_json();
  broken["experiment"] = "mystery";
  CHECK_FALSE(schema_check::validate(broken, schema, errors));
  CHECK_FALSE(errors.empty());

  errors.clear();
  broken = record.to_json();
  broken.erase("seed");
  CHECK_FALSE(schema_check::validate(broken, schema, errors));
}

TEST_CASE("text files write and read back") {
  const std::string path = "merminsim_test_results.tmp";
  write_text_file(path, "alpha\nbeta\n");
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == "alpha\nbeta\n");
  in.close();
  std::remove(path.c_str());

  CHECK_THROWS_AS(write_text_file("/no/such/dir/out.json", "x"),
                  std::runtime_error);
}

}  // TEST_SUITE
