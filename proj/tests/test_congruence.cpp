#include <doctest.h>

#include <set>

#include "common.hpp"
#include "mathieu/congruence.hpp"
#include "mathieu/records.hpp"

using namespace mathieu;
using testing::forms;
using testing::heads;
using testing::m24;

namespace {

const Congruence& find(const std::vector<Congruence>& all, const std::string& text) {
  for (const auto& c : all)
    if (c.text == text) return c;
  FAIL("missing congruence " << text);
  return all.front();
}

Congruence make(const std::string& form, int level, long modulus) {
  Congruence c;
  c.modulus = modulus;
  c.form_modulus = modulus;
  c.level = level;
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : form) {
    if (ch == ' ') {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  c.form = parse_linear_combination(tokens);
  return c;
}

}  // namespace

TEST_SUITE("congruence_engine") {

TEST_CASE("Sturm bounds") {
  CHECK(sturm_bound(6) == 2);
  CHECK(sturm_bound(63) == 16);
  CHECK(sturm_bound(1) == 1);
  CHECK(sturm_bound(16) == 4);
  CHECK(sturm_bound(144, 2) == 48);
}

TEST_CASE("suite shape") {
  auto all = load_congruences();
  std::set<std::pair<int, std::string>> pairs;
  for (const auto& c : all) pairs.insert({c.p, c.cls});
  CHECK(pairs.size() == 22);
  CHECK(all.size() >= 22);
}

TEST_CASE("printed form congruences pass at the bound and five times past it") {
  auto all = load_congruences();
  for (const auto& c : all) {
    CAPTURE(c.text);
    auto r1 = verify_congruence(c, 1, m24(), forms(), heads());
    auto r5 = verify_congruence(c, 5, m24(), forms(), heads());
    CHECK(r1.form_ok);
    CHECK(r5.form_ok);
    CHECK(r1.characters_ok);
    CHECK(r1.relation_ok);
    CHECK(r5.depth_checked == 5 * r1.sturm);
  }
}

TEST_CASE("named congruences") {
  auto all = load_congruences();
  for (const char* form : {"f2A - 4*f6A", "4*f3A - 12*f3B - 9*E2_3", "2*f4C - 2*f8A - E2_2", "f3B - 2*E2_3",
                           "7*f2A - 6*f2B + 8*f4A + 24*f4B + 32*f4C - 64*f8A"}) {
    CAPTURE(form);
    bool seen = false;
    for (const auto& c : all) {
      Congruence probe = make(form, c.level, 1);
      if (probe.form != c.form) continue;
      seen = true;
      CHECK(verify_congruence(c, 1, m24(), forms(), heads()).passed());
    }
    CHECK(seen);
  }
}

TEST_CASE("a wrong modulus is caught") {
  Congruence c = make("f2A - 4*f6A", 6, 9);
  c.relation = {};
  auto r = verify_congruence(c, 1, m24(), forms(), heads());
  CHECK_FALSE(r.form_ok);
  REQUIRE(r.form_first_failure);
  CHECK(*r.form_first_failure >= 1);
}

TEST_CASE("identical forms pass trivially") {
  Congruence c = make("f15A - f15B", 15, 1000003);
  c.relation = {{"15A", 1}, {"15B", -1}};
  auto r = verify_congruence(c, 1, m24(), forms(), heads());
  CHECK(r.form_ok);
  CHECK(r.relation_ok);
  CHECK(r.constant_term == 0);
}

TEST_CASE("bad inputs") {
  Congruence c = make("g2A", 2, 3);
  CHECK_THROWS_AS(form_combination(c, 2, m24(), forms()), DataError);
  Congruence ok = make("f2A", 2, 1);
  CHECK_THROWS_AS(verify_congruence(ok, 0, m24(), forms(), heads()), std::invalid_argument);
}

TEST_CASE("rational orbit characters") {
  auto chars = rational_orbit_characters(m24());
  CHECK(chars.size() == 21);
  for (const auto& [name, psi] : chars)
    for (const auto& v : psi) CHECK(v.is_rational());
}

TEST_CASE("evenness levels and depths") {
  auto res = evenness_suite(testing::mult_rows(), m24());
  CHECK(res.size() == 16);
  for (const auto& r : res) {
    CAPTURE(r.printed.irrep);
    CHECK(r.level_matches());
    CHECK(r.even_ok);
    if (r.printed.irrep == "rho0" || r.printed.irrep == "rho1") CHECK(r.depth_checked == 288);
    if (r.printed.irrep == "rho16") CHECK(r.printed.depth == 6);
  }
  // pairs of complex irreps at n = 3
  const auto& m = testing::mult_rows()[3].mult;
  CHECK(m[m24().irrep_index("rho7")] == 1);
  CHECK(m[m24().irrep_index("rho7bar")] == 1);
}

TEST_CASE("evenness reports rows that were never computed") {
  std::vector<MultiplicityRow> few(testing::mult_rows().begin(), testing::mult_rows().begin() + 10);
  auto res = evenness_suite(few, m24());
  bool any_short = false;
  for (const auto& r : res)
    if (!r.even_ok && r.first_failure == 10) any_short = true;
  CHECK(any_short);
}

}
