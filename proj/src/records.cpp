#include "mathieu/records.hpp"

#include <fstream>
#include <sstream>

#include "mathieu/m24.hpp"

namespace mathieu {

Rational parse_rational(std::string_view s) {
  Rational r;
  if (s.empty() || r.set_str(std::string(s), 10) != 0) throw DataError("bad rational: " + std::string(s));
  if (r.get_den() == 0) throw DataError("zero denominator: " + std::string(s));
  r.canonicalize();
  return r;
}

std::vector<std::vector<std::string>> read_records(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DataError("cannot open " + file.string());
  std::vector<std::vector<std::string>> out;
  std::string line;
  bool versioned = false;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (!versioned) {
      if (toks.size() != 2 || toks[0] != "version" || toks[1] != "1")
        throw DataError(file.string() + ": missing or unsupported version header");
      versioned = true;
      continue;
    }
    out.push_back(std::move(toks));
  }
  if (!versioned) throw DataError(file.string() + ": empty file");
  return out;
}

std::map<std::string, Rational> parse_linear_combination(const std::vector<std::string>& tokens) {
  std::map<std::string, Rational> out;
  int sign = 1;
  bool want_term = true;
  for (const auto& t : tokens) {
    if (t == "+" || t == "-") {
      if (!want_term) sign = 1;
      sign *= t == "-" ? -1 : 1;
      want_term = true;
      continue;
    }
    if (!want_term) throw DataError("missing operator before " + t);
    std::string term = t;
    if (term.front() == '-') {
      sign = -sign;
      term.erase(0, 1);
    }
    Rational coef = 1;
    std::string sym = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      coef = parse_rational(term.substr(0, star));
      sym = term.substr(star + 1);
    } else if (term.find_first_not_of("0123456789/") == std::string::npos) {
      coef = parse_rational(term);
      sym = "1";
    }
    if (sym.empty()) throw DataError("empty symbol in " + t);
    out[sym] += sign * coef;
    sign = 1;
    want_term = false;
  }
  if (want_term && !tokens.empty()) throw DataError("dangling operator");
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace mathieu
