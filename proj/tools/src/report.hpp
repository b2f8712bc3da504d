#pragma once

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace adnil::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

struct ReportCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Report() = default;
  Report(std::string cmd, int rank) : command(std::move(cmd)), n(rank) {}

  std::string command;
  int n = 0;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<ReportCheck> checks;
  double timing_ms = 0;
  std::optional<Table> table;  // set by commands with a natural tabular shape

  void check(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const;
  Json to_json() const;
};

void render(const Report& report, Format format, std::ostream& out);

}  // namespace adnil::cli
