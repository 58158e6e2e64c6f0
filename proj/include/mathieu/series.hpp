#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mathieu {

using Integer = mpz_class;
using Rational = mpq_class;

// Exponents are stored in units of q^(1/24).
inline constexpr std::int64_t kDefaultPrec24 = 24 * 600;

class PrecisionUnderflow : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class ZeroLeadingCoefficient : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Truncated Laurent series sum c_e q^(e/24), known exactly for e < prec24.
class QSeries {
public:
  QSeries() = default;
  QSeries(std::int64_t offset24, std::vector<Rational> coeffs, std::int64_t prec24);

  static QSeries zero(std::int64_t prec24);
  static QSeries constant(const Rational& c, std::int64_t prec24);
  static QSeries monomial(const Rational& c, std::int64_t exp24, std::int64_t prec24);

  std::int64_t offset24() const { return offset24_; }
  std::int64_t prec24() const { return prec24_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Coefficient of q^(e/24); zero below the offset, throws at or past prec24.
  Rational at24(std::int64_t e) const;
  // Coefficient of q^n.
  Rational coeff(std::int64_t n) const { return at24(24 * n); }

  // Largest n with q^n known, i.e. floor((prec24 - 1) / 24).
  std::int64_t max_integral_exponent() const;

  bool is_zero() const;
  bool has_integral_exponents() const;
  // True when every coefficient is an integer.
  bool is_integral() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& c);

  QSeries operator-() const;

  QSeries truncated(std::int64_t prec24) const;
  // Multiply by q^(s/24).
  QSeries shifted(std::int64_t s24) const;
  // tau -> n tau, i.e. q -> q^n.
  QSeries substituted(std::int64_t n) const;

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  // Equal as truncated series: same precision and coefficients.
  friend bool operator==(const QSeries& a, const QSeries& b);

private:
  std::int64_t offset24_ = 0;
  std::vector<Rational> coeffs_;
  std::int64_t prec24_ = 1;
};

QSeries invert(const QSeries& a);
QSeries pow(const QSeries& a, int e);

// sigma_1(k) for 0 <= k <= n (entry 0 unused).
std::vector<Integer> sigma1_table(std::int64_t n);

// eta(m tau) from the pentagonal number theorem.
QSeries eta(int m, std::int64_t prec24 = kDefaultPrec24);

struct EtaFactor {
  int m;
  int e;
};

// scalar * prod eta(m tau)^e
QSeries eta_quotient(const std::vector<EtaFactor>& factors, const Rational& scalar,
                     std::int64_t prec24 = kDefaultPrec24);

QSeries eisenstein_E2(std::int64_t prec24 = kDefaultPrec24);
// (n E2(n tau) - E2(tau)) / (n - 1) for n >= 2, E2 itself for n = 1.
QSeries eisenstein_E2_level(int n, std::int64_t prec24 = kDefaultPrec24);

// Jacobi theta constants in q = e(tau): theta3 = sum q^(k^2/2), theta2 = sum q^((k+1/2)^2/2).
QSeries theta_nullwert(int index, std::int64_t prec24 = kDefaultPrec24);

// 1/4 + sum_{n>=1} q^(n(n+1)/2) / (1 + q^n)
QSeries lambert_halfsum(std::int64_t prec24 = kDefaultPrec24);

// sum over n > m > 0, n - m odd, of (-1)^n m q^(mn/2)
QSeries F2_series(std::int64_t prec24 = kDefaultPrec24);

// eta(tau)^3 q^(-1/8), an integral unit in Z[[q]].
QSeries eta_cubed_unit(std::int64_t prec24 = kDefaultPrec24);

}  // namespace mathieu
