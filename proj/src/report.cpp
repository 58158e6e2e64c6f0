#include "mathieu/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace mathieu {

using nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_line(std::ostringstream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << '\n';
}

}  // namespace

void Report::fail(const std::string& what) {
  passed = false;
  if (!first_failure) first_failure = what;
}

json to_json(const Report& r) {
  json j;
  j["schema"] = kReportSchema;
  j["version"] = kReportVersion;
  j["command"] = r.command;
  j["passed"] = r.passed;
  j["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
  j["config"] = r.config;
  j["results"] = r.results;
  j["table"] = {{"header", r.header}, {"rows", r.rows}};
  j["text"] = r.text;
  return j;
}

Report report_from_json(const json& j) {
  if (j.value("schema", "") != kReportSchema) throw std::invalid_argument("not a mathieu report");
  if (j.value("version", 0) != kReportVersion)
    throw std::invalid_argument("unsupported report version " + j.value("version", json(0)).dump());
  Report r;
  r.command = j.at("command").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  if (!j.at("first_failure").is_null()) r.first_failure = j.at("first_failure").get<std::string>();
  r.config = j.at("config");
  r.results = j.at("results");
  r.header = j.at("table").at("header").get<std::vector<std::string>>();
  r.rows = j.at("table").at("rows").get<std::vector<std::vector<std::string>>>();
  r.text = j.at("text").get<std::vector<std::string>>();
  return r;
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "text") return ReportFormat::text;
  throw std::invalid_argument("unknown format " + s);
}

std::string render(const Report& r, ReportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::json:
      os << to_json(r).dump(2) << '\n';
      break;
    case ReportFormat::csv:
      csv_line(os, r.header);
      for (const auto& row : r.rows) csv_line(os, row);
      break;
    case ReportFormat::text:
      for (const auto& line : r.text) os << line << '\n';
      os << r.command << ": " << (r.passed ? "PASS" : "FAIL");
      if (r.first_failure) os << " (" << *r.first_failure << ")";
      os << '\n';
      break;
  }
  return os.str();
}

void export_report(const Report& r, ReportFormat format, const std::filesystem::path& path) {
  std::string body = render(r, format);
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace mathieu
