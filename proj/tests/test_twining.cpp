#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "common.hpp"

using namespace mathieu;
using testing::forms;
using testing::heads;
using testing::m24;
using testing::mult_rows;

namespace {

// Decompositions of H_1 .. H_9 as published.
const std::vector<std::map<std::string, int>> kPublished = {
    {{"rho2", 1}, {"rho2bar", 1}},
    {{"rho3", 1}, {"rho3bar", 1}},
    {{"rho7", 1}, {"rho7bar", 1}},
    {{"rho14", 2}},
    {{"rho19", 2}},
    {{"rho20", 2}, {"rho16", 2}},
    {{"rho20", 2}, {"rho19", 2}, {"rho18", 2}, {"rho17", 2}, {"rho13", 2}, {"rho12", 2}},
    {{"rho20", 6}, {"rho19", 2}, {"rho18", 2}, {"rho17", 4}, {"rho16", 2}, {"rho15", 2}, {"rho14", 2},
     {"rho11", 2}, {"rho10", 1}, {"rho10bar", 1}, {"rho8", 1}, {"rho8bar", 1}},
    {{"rho20", 10}, {"rho19", 8}, {"rho18", 8}, {"rho17", 4}, {"rho16", 4}, {"rho15", 4}, {"rho14", 2},
     {"rho13", 2}, {"rho12", 2}, {"rho10", 2}, {"rho10bar", 2}, {"rho9", 2}, {"rho7", 2}, {"rho7bar", 2},
     {"rho6", 2}},
};

Multiplicities as_mult(const std::map<std::string, int>& m) {
  Multiplicities out;
  for (const auto& [name, c] : m) out[m24().irrep_index(name)] = c;
  return out;
}

std::filesystem::path copy_data(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::copy(data_directory(), dir);
  return dir;
}

}  // namespace

TEST_SUITE("twining_forms") {

TEST_CASE("every recipe reproduces its published coefficients") {
  for (const auto& r : forms().recipes()) {
    CAPTURE(r.label);
    QSeries f = build_series(r, 24 * 12);
    REQUIRE(r.printed.size() == 10);
    for (int n = 0; n < 10; ++n) CHECK(f.coeff(n) == r.printed[n]);
  }
  CHECK(forms().recipes().size() == 21);
}

TEST_CASE("spot expansions") {
  QSeries f4b = build_fg("4B", 24 * 6, m24(), forms()).series;
  CHECK(testing::coeffs(f4b, 3) == std::vector<Rational>{Rational(5, 3), 8, 40, 32});
  QSeries f23 = build_fg("23AB", 24 * 6, m24(), forms()).series;
  CHECK(testing::coeffs(f23, 4) == std::vector<Rational>{Rational(23, 12), 0, 0, 23, 23});
  CHECK(build_fg("1A", 24 * 6, m24(), forms()).series.is_zero());
  auto f12b = build_fg("12B", 24 * 4, m24(), forms());
  CHECK(f12b.level == 144);
  CHECK(f12b.multiplier_order == 12);
  CHECK_THROWS(forms().recipe("9A"));
}

TEST_CASE("head character values") {
  const auto& H = heads();
  const auto& d = m24();
  CHECK(H.at(0, 0) == -2);
  CHECK(H.at(1, 0) == 90);
  CHECK(H.at(1, d.class_index("2A")) == -6);
  CHECK(H.at(4, 0) == 4554);
  CHECK(H.at(5, 0) == 11592);
  for (std::size_t k = 0; k < kNumClasses; ++k) CHECK(H.at(0, k) == -2);
}

TEST_CASE("split classes share their merged values") {
  const auto& H = heads();
  const auto& d = m24();
  for (std::int64_t n = 0; n <= H.nmax(); n += 7)
    for (const char* pair : {"7", "14", "15", "21", "23"}) {
      std::string a = std::string(pair) + "A", b = std::string(pair) + "B";
      CHECK(H.at(n, d.class_index(a)) == H.at(n, d.class_index(b)));
    }
}

TEST_CASE("published decompositions of H_1 .. H_9") {
  for (int n = 1; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(mult_rows()[n].mult == as_mult(kPublished[n - 1]));
  }
  CHECK(mult_rows()[0].mult == as_mult({{"rho0", -2}}));
}

TEST_CASE("series values equal the character reconstruction") {
  const auto& d = m24();
  for (const auto& row : mult_rows()) {
    for (std::size_t k = 0; k < kNumClasses; ++k) {
      QuadIrr v;
      for (std::size_t i = 0; i < kNumClasses; ++i) v += d.value(i, k) * row.mult[i];
      CHECK(v == QuadIrr(Rational(heads().at(row.n, k))));
    }
  }
}

TEST_CASE("nonnegative integral, even, positive and Conway-compatible rows") {
  for (const auto& row : mult_rows()) {
    if (row.n == 0) continue;
    CAPTURE(row.n);
    CHECK(row.integral);
    CHECK(row.nonnegative);
    CHECK(row.even_pattern);
    CHECK(row.conway_ok);
    if (row.n >= 25)
      for (const auto& x : row.mult) CHECK(x > 0);
  }
}

TEST_CASE("crosscheck through the theta route") {
  HeadCharacterMatrix H = head_characters(40, 24 * 42, m24(), forms());
  for (const auto& label : m24().merged_labels()) {
    CAPTURE(label);
    CHECK(crosscheck_fg(label, H, m24(), forms()).ok);
  }
}

TEST_CASE("head_characters rejects bad arguments") {
  CHECK_THROWS_AS(head_characters(10, 24 * 11, m24(), forms()), std::invalid_argument);
  CHECK_THROWS_AS(head_characters(-1, 48, m24(), forms()), std::invalid_argument);
  CHECK(head_characters(0, 48, m24(), forms()).nmax() == 0);
}

TEST_CASE("a corrupted recipe yields a non-integral coefficient, not a rounded one") {
  auto dir = copy_data("mathieu_bad_forms");
  std::ifstream in(dir / "twining_forms.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = std::regex_replace(ss.str(), std::regex("E2 2 4/3"), "E2 2 5/3");
  in.close();
  std::ofstream(dir / "twining_forms.txt") << text;
  FormLibrary bad = FormLibrary::load(dir);
  CHECK_THROWS_AS(head_characters(3, 24 * 5, m24(), bad), NonIntegralCoefficient);
  std::filesystem::remove_all(dir);
}

TEST_CASE("Conway restriction criterion") {
  const auto& d = m24();
  CHECK(conway_restriction_check(mult_rows()[1].mult, d));
  CHECK(conway_restriction_check(mult_rows()[9].mult, d));
  Multiplicities m;
  m[d.irrep_index("rho2")] = 1;
  CHECK_FALSE(conway_restriction_check(m, d));
  Multiplicities p;
  p[d.irrep_index("rho9")] = 1;
  CHECK_FALSE(conway_restriction_check(p, d));
  p[d.irrep_index("rho15")] = 1;
  CHECK(conway_restriction_check(p, d));
  Multiplicities frac;
  frac[0] = Rational(1, 2);
  CHECK_THROWS(conway_restriction_check(frac, d));
}

TEST_CASE("evenness pattern predicate") {
  const auto& d = m24();
  Multiplicities m;
  m[d.irrep_index("rho7")] = 1;
  m[d.irrep_index("rho7bar")] = 1;
  CHECK(evenness_pattern(m, d));
  m[d.irrep_index("rho20")] = 1;
  CHECK_FALSE(evenness_pattern(m, d));
}

TEST_CASE("Conway dimension identities") {
  auto res = conway_dimension_check(ConwayData::load(), m24());
  auto find = [&](const std::string& prefix) {
    for (const auto& b : res)
      if (b.text.rfind(prefix, 0) == 0) return b;
    FAIL("no identity " << prefix);
    return DimensionBalance{};
  };
  auto r1 = find("rho1 =");
  CHECK(r1.lhs == 23);
  CHECK(r1.balanced);
  auto r16 = find("rho16 =");
  CHECK(r16.lhs == 3520);
  CHECK(r16.rhs == 3520);
  CHECK(find("rho12 =").balanced);
  // rho7bar balances once the recorded erratum is applied
  auto r7 = find("rho7bar =");
  CHECK_FALSE(r7.balanced);
  REQUIRE(r7.amended_rhs);
  CHECK(*r7.amended_rhs == 770);
  // the printed rho6 identity is off by 21
  auto r6 = find("rho6 =");
  CHECK(r6.lhs == 483);
  CHECK(r6.rhs == 462);
  int unbalanced = 0;
  for (const auto& b : res)
    if (!b.balanced && !(b.amended_rhs && *b.amended_rhs == b.lhs)) ++unbalanced;
  CHECK(unbalanced == 1);
}

}
