#include <doctest.h>

#include <cmath>

#include "common.hpp"
#include "mathieu/bounds.hpp"

using namespace mathieu;
using testing::heads;
using testing::m24;

namespace {

// Direct transcription of the bound, written independently of the library.
double t3_reference(double k, double n, double h, double pf) {
  double D = 8 * k - 1;
  double a = 6.124 * std::pow(n, 35.0 / 6) * std::pow(h, 47.0 / 6) - 3.09 * std::pow(n, 5.75) * std::pow(h, 7.75) +
             64.32 * std::pow(n, 29.0 / 6) * std::pow(h, 7) - 23 * std::pow(n, 4.75) * std::pow(h, 7);
  double b = .146 * std::pow(n, 47.0 / 6) * std::pow(h, 65.0 / 6) - .114 * std::pow(n, 7.75) * std::pow(h, 10.75) +
             2.51 * std::pow(n, 35.0 / 6) * std::pow(h, 10) - .74 * std::pow(n, 5.75) * std::pow(h, 10);
  return pf * (1 + 2.13 * std::pow(D, 0.125) * std::log(D)) * (a * D + b * std::pow(D, 1.5));
}

const ClassBound& by_label(const BoundReport& r, const std::string& label) {
  for (const auto& c : r.classes)
    if (c.label == label) return c;
  FAIL("no class " << label);
  return r.classes.front();
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("error-term bound values") {
  const double D = 39;
  double want = (3872 * D + 213 * std::pow(D, 1.5)) * (1 + 2.13 * std::pow(D, 0.125) * std::log(D));
  CHECK(error_term_bound(5, 2, 1) == doctest::Approx(want).epsilon(1e-12));
  CHECK(error_term_bound(5, 4, 1) == doctest::Approx(t3_reference(5, 4, 1, 1.5)).epsilon(1e-12));
  CHECK(error_term_bound(7, 24, 12) == doctest::Approx(t3_reference(7, 24, 12, 1.5 * 4.0 / 3)).epsilon(1e-12));
  CHECK(error_term_bound(5, 4, 1) > 0);
}

TEST_CASE("error-term bound grows with k") {
  for (auto [n, h] : std::vector<std::pair<int, int>>{{2, 1}, {4, 1}, {4, 2}, {6, 3}, {24, 12}, {46, 1}}) {
    double prev = 0;
    for (int k = 5; k <= 1000; k += 5) {
      double v = error_term_bound(k, n, h);
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("error-term bound parameter checks") {
  CHECK_THROWS(error_term_bound(4, 2, 1));
  CHECK_THROWS(error_term_bound(5, 2, 2));   // gcd(0, 4) != 1
  CHECK_THROWS(error_term_bound(5, 10, 5));  // 5 does not divide 24
  CHECK_THROWS(error_term_bound(5, 6, 2));
}

TEST_CASE("tabulated constants are reproduced to an order of magnitude") {
  for (const auto& c : m24().classes()) {
    if (c.label == "1A") continue;
    double est = error_constant_estimate(c.order, c.h);
    CAPTURE(c.label);
    CHECK(std::abs(std::log10(est / c.bound_constant())) < 1);
  }
}

TEST_CASE("analytic bounds at k = 390") {
  auto r = character_bounds(390, m24());
  CHECK(r.certificate);
  CHECK(r.classes.size() == 25);
  const auto& b12 = by_label(r, "12B");
  CHECK(b12.ratio > 1.3);
  CHECK(b12.ratio < 2.6);
  double min_other = INFINITY;
  for (const auto& c : r.classes)
    if (c.label != "12B") min_other = std::min(min_other, c.ratio);
  CHECK(min_other > 1.6e5);
  CHECK(min_other < 3.2e5);
  for (const auto& c : r.classes) CHECK(std::isfinite(c.upper));
}

TEST_CASE("analytic bounds below 390") {
  CHECK_THROWS_AS(character_bounds(149, m24()), std::invalid_argument);
  auto r = character_bounds(150, m24());
  CHECK(std::isfinite(r.identity_lower));
  CHECK(r.identity_lower > 0);
  for (std::int64_t k = 1000; k <= 10000; k += 3000) {
    auto big = character_bounds(k, m24());
    CHECK(std::isfinite(big.identity_lower));
    CHECK(big.certificate);
  }
}

TEST_CASE("analytic bounds really bound the exact values") {
  for (std::int64_t k = 150; k <= 200; ++k) {
    auto a = character_bounds(k, m24());
    auto e = exact_bounds(k, m24(), heads());
    CHECK(e.identity_lower >= a.identity_lower);
    for (std::size_t i = 0; i < a.classes.size(); ++i) CHECK(e.classes[i].upper <= a.classes[i].upper);
  }
}

TEST_CASE("exact certificate") {
  for (std::int64_t k = 31; k <= 200; ++k) {
    CAPTURE(k);
    CHECK(positivity_certificate(k, BoundMode::exact, m24(), &heads()));
  }
  // holds from 26 on, fails at 25
  CHECK(positivity_certificate(26, BoundMode::exact, m24(), &heads()));
  CHECK_FALSE(positivity_certificate(25, BoundMode::exact, m24(), &heads()));
  CHECK(positivity_certificate(390, BoundMode::analytic, m24()));
  CHECK_THROWS(positivity_certificate(31, BoundMode::exact, m24()));
  CHECK_THROWS_AS(exact_bounds(301, m24(), heads()), std::out_of_range);
}

}
