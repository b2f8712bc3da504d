#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace adnil::cli {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.pass; });
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["n"] = n;
  j["inputs"] = inputs;
  j["results"] = results;
  Json cs = Json::array();
  for (const ReportCheck& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = cs;
  j["timing_ms"] = timing_ms;
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void text_value(std::ostream& out, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object() && !v.empty()) {
    out << pad << key << ":\n";
    for (const auto& [k, sub] : v.items()) text_value(out, k, sub, indent + 2);
  } else if (v.is_array() && !v.empty() && v.front().is_array()) {
    out << pad << key << ":\n";
    for (const Json& row : v) out << pad << "  " << scalar_text(row) << '\n';
  } else {
    out << pad << key << ": " << scalar_text(v) << '\n';
  }
}

}  // namespace

void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::json:
      out << report.to_json().dump(2) << '\n';
      return;
    case Format::csv:
      if (report.table) {
        for (std::size_t i = 0; i < report.table->header.size(); ++i)
          out << (i ? "," : "") << csv_field(report.table->header[i]);
        out << '\n';
        for (const auto& row : report.table->rows) {
          for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
          out << '\n';
        }
      } else {
        out << "key,value\n";
        for (const auto& [k, v] : report.results.items()) out << csv_field(k) << ',' << csv_field(scalar_text(v)) << '\n';
      }
      for (const ReportCheck& c : report.checks)
        out << csv_field("check:" + c.name) << ',' << (c.pass ? "pass" : "fail") << '\n';
      return;
    case Format::text:
      out << report.command << " (n=" << report.n << ")\n";
      for (const auto& [k, v] : report.results.items()) text_value(out, k, v, 2);
      for (const ReportCheck& c : report.checks) {
        out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << '\n';
      }
      out << "  time: " << std::fixed << std::setprecision(3) << report.timing_ms << " ms\n";
      out.unsetf(std::ios::fixed);
      return;
  }
}

}  // namespace adnil::cli
