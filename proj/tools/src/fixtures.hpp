#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace glidekit::cli {

struct EmbeddedFixture {
  const char* file_name;
  const char* content;
};

/// Fixture files compiled into the binary, sorted by file name.
const std::vector<EmbeddedFixture>& embedded_fixtures();

struct Fixture {
  std::string file_name;
  std::string id;
  std::string description;
  std::string kind;
  Json input;
  Json expected;
};

/// Parses one fixture document; throws Error(kParse) on missing fields.
Fixture parse_fixture(const std::string& file_name, const std::string& text);
std::vector<Fixture> load_embedded_fixtures();
/// Every *.json file in dir, sorted by file name.
std::vector<Fixture> load_fixture_dir(const std::string& dir);

/// Recomputes the value a fixture describes, in the same JSON shape as its
/// expected field.
Json evaluate_fixture(const Fixture& fixture);

/// Exact comparison of a computed value against the fixture. Kinds whose
/// expected value is a set compare without regard to order.
bool compare_fixture(const Fixture& fixture, const Json& actual);

struct FixtureRow {
  std::string id;
  std::string kind;
  std::string description;
  bool passed = false;
  /// Error text when evaluation threw; empty otherwise.
  std::string error;
  Json actual;
};

struct VerifyReport {
  std::vector<FixtureRow> rows;
  bool all_passed() const;
  std::size_t passed_count() const;
};

VerifyReport verify_fixtures(const std::vector<Fixture>& fixtures);
Json to_json(const VerifyReport& report);
/// Aligned plain-text table with one PASS/FAIL row per fixture.
std::string to_table(const VerifyReport& report);

}  // namespace glidekit::cli
