#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <array>
#include <random>

#include "common.hpp"
#include "mathieu/kloosterman.hpp"

using namespace mathieu;

namespace {

// (n, h) for the 21 twining forms
std::vector<std::pair<std::int64_t, std::int64_t>> table_params() {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& label : testing::m24().merged_labels()) {
    const auto& c = testing::m24().merged_info(label);
    out.emplace_back(c.order, c.h);
  }
  return out;
}

}  // namespace

TEST_SUITE("kloosterman") {

TEST_CASE("e(x) reduces exactly") {
  CHECK(std::abs(e_of(Rational(1, 4)) - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(e_of(Rational(1000000001, 4)) - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(e_of(Rational(-1, 2)) - Complex(-1, 0)) < 1e-15);
}

TEST_CASE("Dedekind sums") {
  CHECK(dedekind_sum(1, 1) == 0);
  CHECK(dedekind_sum(1, 3) == Rational(1, 18));
  CHECK(dedekind_sum(1, 5) == Rational(1, 5));
  // reciprocity s(h,k) + s(k,h) = (h/k + k/h + 1/(hk))/12 - 1/4
  for (std::int64_t h = 1; h < 30; ++h)
    for (std::int64_t k = 1; k < 30; ++k) {
      if (std::gcd(h, k) != 1) continue;
      Rational want = (Rational(h) / k + Rational(k) / h + Rational(1) / (h * k)) / 12 - Rational(1, 4);
      CHECK(dedekind_sum(h, k) + dedekind_sum(k, h) == want);
    }
}

TEST_CASE("omega from the closed form agrees with the Dedekind sum") {
  CHECK(omega_phase(1, 1) == 0);
  CHECK(std::abs(omega(1, 1) - Complex(1, 0)) < 1e-15);
  for (std::int64_t c = 1; c <= 80; ++c)
    for (std::int64_t d = -c; d <= 2 * c; ++d) {
      if (std::gcd(d, c) != 1) continue;
      CHECK(std::abs(omega(d, c) - omega_dedekind(d, c)) < 1e-12);
    }
  CHECK(std::abs(omega(1, 2) - omega_dedekind(1, 2)) < 1e-15);
  CHECK_THROWS_AS(omega(2, 4), std::domain_error);
  CHECK_THROWS_AS(omega(1, 0), std::invalid_argument);
}

TEST_CASE("eta transformation law at tau = i") {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::int64_t> U(1, 40);
  const Complex tau(0, 1);
  const Complex eta_tau = eta_numeric(tau);
  int done = 0;
  while (done < 20) {
    std::int64_t c = U(rng), d = U(rng) - 20;
    if (std::gcd(c, d) != 1) continue;
    // a d - b c = 1
    std::int64_t a = 0, b = 0;
    for (a = -60; a <= 60; ++a)
      if ((a * d - 1) % c == 0) break;
    b = (a * d - 1) / c;
    Complex g = (Complex(a) * tau + Complex(b)) / (Complex(c) * tau + Complex(d));
    Complex lhs = eta_numeric(g);
    Complex rhs = eta_multiplier(a, b, c, d) * std::sqrt(Complex(c) * tau + Complex(d)) * eta_tau;
    CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(lhs)));
    ++done;
  }
  CHECK_THROWS(eta_multiplier(1, 1, 1, 1));
  CHECK_THROWS(eta_multiplier(1, 0, 0, 1));
  CHECK_THROWS(eta_numeric(Complex(0, -1)));
}

TEST_CASE("square roots modulo m") {
  for (std::int64_t m = 1; m < 600; ++m)
    for (std::int64_t a : {0L, 1L, 2L, 4L, 9L, m - 1, 3 * m + 7}) {
      std::vector<std::int64_t> brute;
      for (std::int64_t x = 0; x < m; ++x)
        if (((x * x - a) % m + m) % m == 0) brute.push_back(x);
      CHECK(sqrt_mod(a, m) == brute);
    }
  CHECK(sqrt_mod(3, 7).empty());
  CHECK_THROWS(sqrt_mod(1, 0));
}

TEST_CASE("one-term sums") {
  for (std::int64_t k = -3; k <= 5; ++k) {
    CHECK(std::abs(kloosterman_direct(k, 1, 1, 1) - Complex(1, 0)) < 1e-12);
    CHECK(std::abs(kloosterman_sparse(k, 1, 1, 1) - Complex(1, 0)) < 1e-12);
  }
  CHECK(std::abs(kloosterman_direct(1, 1, 1, 2) - kloosterman_sparse(1, 1, 1, 2)) < 1e-8);
  CHECK(std::abs(kloosterman_direct(2, 4, 1, 3) - kloosterman_sparse(2, 4, 1, 3)) < 1e-8);
  auto v = kloosterman(2, {4, 1}, 3, KloostermanMethod::direct);
  CHECK(v.method == KloostermanMethod::direct);
  CHECK(v.n == 4);
}

TEST_CASE("sparse and direct agree on every table parameter") {
  double worst = 0;
  for (auto [n, h] : table_params())
    for (std::int64_t k = 1; k <= 10; ++k)
      for (std::int64_t c = 1; c <= 30; ++c)
        worst = std::max(worst, std::abs(kloosterman_direct(k, n, h, c) - kloosterman_sparse(k, n, h, c)));
  CHECK(worst < 1e-8);
}

TEST_CASE("sums are bounded by their term count") {
  for (auto [n, h] : table_params())
    for (std::int64_t c = 1; c <= 12; ++c) {
      std::int64_t N = n * c, phi = 0;
      for (std::int64_t d = 1; d <= N; ++d) phi += std::gcd(d, N) == 1;
      CHECK(std::abs(kloosterman_direct(3, n, h, c)) <= phi + 1e-9);
    }
}

TEST_CASE("reduction to the untwisted multiplier") {
  for (auto [n, h] : table_params()) {
    if (h == 1) continue;
    for (std::int64_t c = 1; c <= 12; ++c)
      for (std::int64_t k = 1; k <= 6; ++k) {
        if ((c * c * n) % h != 0) continue;
        Complex lhs = kloosterman_direct(k, n, h, c);
        Complex rhs = kloosterman_direct(k - c * c * n / h, n, 1, c);
        CHECK(std::abs(lhs - rhs) < 1e-8);
      }
  }
}

TEST_CASE("parameter errors") {
  CHECK_THROWS(kloosterman_direct(1, 4, 3, 1));
  CHECK_THROWS(kloosterman_sparse(1, 0, 1, 1));
  CHECK_THROWS(kloosterman_sparse(1, 2, 1, 0));
}

TEST_CASE("Bessel function bounds on a log grid") {
  for (double lx = std::log(1e-3); lx <= std::log(50.0); lx += 0.05) {
    double x = std::exp(lx), I = bessel_i_half(x);
    if (x < 1) CHECK(std::abs(I - std::sqrt(2 * x / std::numbers::pi)) <= 0.2 * std::sqrt(2 * std::pow(x, 5) / std::numbers::pi));
    double bound = std::exp(x) / std::sqrt(2 * std::numbers::pi * x);
    // I = bound (1 - e^{-2x}); past x ~ 18 the two agree to double precision
    CHECK(I <= bound * (1 + 1e-14));
    if (x < 18) CHECK(I < bound);
  }
}

TEST_CASE("Rademacher partial sums") {
  CHECK(std::abs(rademacher_partial(1, 1, 1, 500) - 90) < 0.5);
  CHECK(std::abs(rademacher_partial(5, 1, 1, 500) - 11592) < 0.5);
  const auto& H = testing::heads();
  std::size_t cls = testing::m24().class_index("2A");
  CHECK(std::abs(rademacher_partial(2, 2, 1, 500) - H.at(2, cls).get_d()) < 0.5);
  // the first term alone is noticeably off
  CHECK(std::abs(rademacher_term(1, 1, 1, 1) - 90) > 1);
  // fixed summation order
  CHECK(rademacher_partial(3, 3, 1, 300) == rademacher_partial(3, 3, 1, 300));
}

TEST_CASE("zeta partial sums") {
  CHECK(std::abs(kloosterman_zeta_partial(4, 1, 1, 0.75, 1) - Complex(1, 0)) < 1e-12);
  // s = 2 against the direct sum
  Complex direct = 0;
  for (std::int64_t c = 1; c <= 40; ++c) direct += kloosterman_direct(3, 2, 1, c) * std::pow(double(2 * c), -4.0);
  CHECK(std::abs(kloosterman_zeta_partial(3, 2, 1, 2.0, 40) - direct) < 1e-8);
  // s = 3/4 converges only conditionally; single parameter sets oscillate (k = 2, n = 1 grows from
  // C = 100 to C = 400), so the trend is taken over several parameter sets.
  const std::vector<std::array<std::int64_t, 3>> params = {{2, 1, 1}, {1, 1, 1}, {5, 1, 1}, {3, 2, 1}, {10, 4, 1}};
  std::vector<double> mean;
  for (std::int64_t C : {100, 200, 400, 800, 1600}) {
    double s = 0;
    for (auto [k, n, h] : params) {
      double block = std::abs(kloosterman_zeta_partial(k, n, h, 0.75, 2 * C) - kloosterman_zeta_partial(k, n, h, 0.75, C));
      CHECK(block < 0.05);
      s += block;
    }
    mean.push_back(s / params.size());
  }
  MESSAGE("mean dyadic blocks " << mean[0] << " " << mean[1] << " " << mean[2] << " " << mean[3] << " " << mean[4]);
  CHECK(mean[3] < mean[0]);
  CHECK(mean[4] < mean[0]);
}

TEST_CASE("incomplete Kloosterman sums") {
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(97) == 2);
  CHECK_THROWS(divisor_count(0));
  for (std::int64_t k = 1; k <= 40; ++k)
    for (std::int64_t u = -3; u <= 5; ++u) {
      auto full = incomplete_kloosterman(u, k, 1, k);
      CHECK(std::abs(full.value - complete_kloosterman(0, u, k)) < 1e-9);
    }
  // one admissible h
  auto one = incomplete_kloosterman(5, 12, 7, 7);
  CHECK(std::abs(std::abs(one.value) - 1) < 1e-12);
  CHECK(std::abs(incomplete_kloosterman(5, 12, 8, 8).value) < 1e-12);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    std::int64_t k = std::uniform_int_distribution<std::int64_t>(1, 500)(rng);
    std::int64_t u = std::uniform_int_distribution<std::int64_t>(-1000, 1000)(rng);
    std::int64_t h1 = std::uniform_int_distribution<std::int64_t>(-600, 600)(rng);
    std::int64_t h2 = h1 + std::uniform_int_distribution<std::int64_t>(0, 1200)(rng);
    auto r = incomplete_kloosterman(u, k, h1, h2);
    CHECK(std::abs(r.value) < r.bound);
  }
  CHECK_THROWS(incomplete_kloosterman(1, 5, 3, 2));
}

}
