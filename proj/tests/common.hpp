#pragma once

#include <string>
#include <vector>

#include "mathieu/m24.hpp"
#include "mathieu/twining.hpp"

namespace testing {

inline const mathieu::M24Data& m24() {
  static const mathieu::M24Data d = mathieu::M24Data::load();
  return d;
}

inline const mathieu::FormLibrary& forms() {
  static const mathieu::FormLibrary lib = mathieu::FormLibrary::load();
  return lib;
}

// Head characters through n = 300, shared by the suites.
inline const mathieu::HeadCharacterMatrix& heads() {
  static const mathieu::HeadCharacterMatrix H = mathieu::head_characters(300, 24 * 302, m24(), forms());
  return H;
}

inline const std::vector<mathieu::MultiplicityRow>& mult_rows() {
  static const std::vector<mathieu::MultiplicityRow> rows = mathieu::multiplicity_table(heads(), m24());
  return rows;
}

inline std::vector<mathieu::Rational> coeffs(const mathieu::QSeries& f, int upto) {
  std::vector<mathieu::Rational> out;
  for (int n = 0; n <= upto; ++n) out.push_back(f.coeff(n));
  return out;
}

inline std::vector<mathieu::Rational> Q(std::initializer_list<long> xs) {
  std::vector<mathieu::Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace testing
