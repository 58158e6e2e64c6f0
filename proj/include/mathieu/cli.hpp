#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mathieu/report.hpp"

namespace mathieu {

// Bad command line or parameters; the tool exits with status 2.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::int64_t n_max = 300;
  std::int64_t prec24 = 0;  // 0: 24 (n_max + 2)
  std::optional<std::int64_t> c_max;
  std::optional<std::int64_t> k;
  std::optional<std::string> class_label;
  std::optional<std::string> mode;  // exact | analytic
  std::string format = "json";
  std::string output;
};

const std::vector<std::string>& commands();

// Throws ConfigError on an invalid configuration.
Report run(const RunConfig& config);

// 0 if passed, 1 otherwise.
int exit_status(const Report& r);

}  // namespace mathieu
