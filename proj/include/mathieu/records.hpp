#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mathieu/series.hpp"

namespace mathieu {

// Tokenized non-comment lines of a data file that starts with "version 1".
std::vector<std::vector<std::string>> read_records(const std::filesystem::path& file);

Rational parse_rational(std::string_view s);

// "37*s14 + s13 - 2" -> {s14: 37, s13: 1, 1: -2}. Symbols may start with a digit (4C);
// a term made only of digits, slashes and signs is a constant.
std::map<std::string, Rational> parse_linear_combination(const std::vector<std::string>& tokens);

}  // namespace mathieu
