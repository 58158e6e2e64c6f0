#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace mathieu {

inline constexpr const char* kReportSchema = "mathieu-report";
inline constexpr int kReportVersion = 1;

struct Report {
  std::string command;
  bool passed = true;
  std::optional<std::string> first_failure;
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> text;

  // Records a failure; the first one is kept.
  void fail(const std::string& what);

  bool operator==(const Report&) const = default;
};

nlohmann::json to_json(const Report& r);
// Throws std::invalid_argument on a schema or version mismatch.
Report report_from_json(const nlohmann::json& j);

enum class ReportFormat { json, csv, text };

ReportFormat parse_format(const std::string& s);
std::string render(const Report& r, ReportFormat format);
// Writes to path, or stdout when path is empty; throws std::runtime_error if the file cannot be written.
void export_report(const Report& r, ReportFormat format, const std::filesystem::path& path);

}  // namespace mathieu
