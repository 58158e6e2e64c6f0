#include "mathieu/bounds.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mathieu {

namespace {

double prime_factor_product(std::int64_t m) {
  double prod = 1;
  for (std::int64_t p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    prod *= static_cast<double>(p + 1) / p;
    while (m % p == 0) m /= p;
  }
  return prod;
}

void check_params(std::int64_t n, std::int64_t h) {
  if (n <= 0 || h <= 0 || std::gcd(n, std::int64_t{24}) % h != 0)
    throw std::invalid_argument("error_term_bound: h must divide gcd(n, 24)");
  if (std::gcd(n / h - 1, 2 * h) != 1) throw std::invalid_argument("error_term_bound: gcd(n/h - 1, 2h) != 1");
}

struct Coefficients {
  double linear, cubic;  // multipliers of |D| and |D|^{3/2}
};

Coefficients error_term_coefficients(std::int64_t n_, std::int64_t h_) {
  if (n_ == 2) return {3872, 213};
  const double n = static_cast<double>(n_), h = static_cast<double>(h_);
  const double pf = prime_factor_product(n_ * h_);
  double lin = 6.124 * std::pow(n, 35.0 / 6) * std::pow(h, 47.0 / 6) - 3.09 * std::pow(n, 23.0 / 4) * std::pow(h, 31.0 / 4) +
               64.32 * std::pow(n, 29.0 / 6) * std::pow(h, 7) - 23 * std::pow(n, 19.0 / 4) * std::pow(h, 7);
  double cub = .146 * std::pow(n, 47.0 / 6) * std::pow(h, 65.0 / 6) - .114 * std::pow(n, 31.0 / 4) * std::pow(h, 43.0 / 4) +
               2.51 * std::pow(n, 35.0 / 6) * std::pow(h, 10) - .74 * std::pow(n, 23.0 / 4) * std::pow(h, 10);
  return {pf * lin, pf * cub};
}

double order_of(const ClassInfo& c) { return static_cast<double>(c.order); }

}  // namespace

double error_term_bound(std::int64_t k, std::int64_t n, std::int64_t h) {
  if (k < 5) throw std::invalid_argument("error_term_bound: need k >= 5");
  check_params(n, h);
  const double D = static_cast<double>(8 * k - 1);
  auto [lin, cub] = error_term_coefficients(n, h);
  return (1 + 2.13 * std::pow(D, 0.125) * std::log(D)) * (lin * D + cub * std::pow(D, 1.5));
}

double error_constant_estimate(std::int64_t n_g, std::int64_t h_g) {
  const std::int64_t n = 2 * n_g;
  check_params(n, h_g);
  // 2.13|D|^{1/8} log|D| <= 120 |D|^{1/7} and |D| <= |D|^{3/2}, with |D| = K^2
  auto [lin, cub] = error_term_coefficients(n, h_g);
  return 120 * (lin + cub);
}

BoundReport character_bounds(std::int64_t k, const M24Data& data) {
  if (k < 150) throw std::invalid_argument("character_bounds: need k >= 150");
  const double K = std::sqrt(8.0 * k - 1), pi = std::numbers::pi;
  const double tail = std::pow(K, 23.0 / 7);
  // log-domain for the dominant exponential
  const double log_lead = std::log(4 / K) + pi * K / 2;
  const double rest = (4 * pi / std::numbers::sqrt2) * std::exp(pi * K / 4) + 2.5e4 * tail;
  const double log_lower = log_lead + std::log1p(-rest / std::exp(log_lead));

  BoundReport r;
  r.k = k;
  r.mode = BoundMode::analytic;
  r.identity_lower = std::exp(log_lower);
  const double log_group = std::log(data.group_order().get_d());
  double sum = 0;
  for (std::size_t i = 1; i < data.classes().size(); ++i) {
    const ClassInfo& c = data.classes()[i];
    ClassBound b;
    b.label = c.label;
    b.order = c.order;
    b.centralizer = c.centralizer;
    b.table_constant = c.bound_constant();
    const double ng = order_of(c);
    b.upper = 4 / (K * std::sqrt(ng)) * std::exp(pi * K / (2 * ng)) + std::sqrt(8.0) * pi * std::exp(pi * K / (4 * ng)) +
              b.table_constant * tail;
    const double log_term = std::log(b.upper) - std::log(c.centralizer.get_d());
    b.ratio = std::exp(log_lower - log_group - log_term);
    sum += std::exp(log_term - (log_lower - log_group));
    r.classes.push_back(b);
  }
  r.certificate = sum < 1;
  return r;
}

BoundReport exact_bounds(std::int64_t k, const M24Data& data, const HeadCharacterMatrix& H) {
  if (k < 0 || k > H.nmax())
    throw std::out_of_range("exact_bounds: k = " + std::to_string(k) + " outside the computed range");
  BoundReport r;
  r.k = k;
  r.mode = BoundMode::exact;
  const Rational lhs = Rational(H.at(k, 0)) / Rational(data.group_order());
  r.identity_lower = H.at(k, 0).get_d();
  Rational sum;
  for (std::size_t i = 1; i < data.classes().size(); ++i) {
    const ClassInfo& c = data.classes()[i];
    ClassBound b;
    b.label = c.label;
    b.order = c.order;
    b.centralizer = c.centralizer;
    b.table_constant = c.bound_constant();
    Integer v = abs(H.at(k, i));
    b.upper = v.get_d();
    Rational term = Rational(v) / Rational(c.centralizer);
    sum += term;
    b.ratio = v == 0 ? INFINITY : Rational(lhs / term).get_d();
    r.classes.push_back(b);
  }
  r.certificate = lhs > sum;
  return r;
}

bool positivity_certificate(std::int64_t k, BoundMode mode, const M24Data& data, const HeadCharacterMatrix* H) {
  if (mode == BoundMode::analytic) return character_bounds(k, data).certificate;
  if (H == nullptr) throw std::invalid_argument("positivity_certificate: exact mode needs head characters");
  return exact_bounds(k, data, *H).certificate;
}

}  // namespace mathieu
