#include "mathieu/series.hpp"

#include <algorithm>
#include <string>

namespace mathieu {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Number of integral exponents n >= 0 with 24 n < prec24.
std::int64_t integral_terms(std::int64_t prec24) {
  if (prec24 <= 0) return 0;
  return floor_div(prec24 - 1, 24) + 1;
}

struct IntegerImage {
  std::vector<std::pair<std::size_t, Integer>> terms;  // (index, numerator) with index < limit
  Integer denom = 1;
};

IntegerImage integer_image(const std::vector<Rational>& c, std::size_t limit) {
  IntegerImage img;
  limit = std::min(limit, c.size());
  for (std::size_t i = 0; i < limit; ++i) {
    if (sgn(c[i]) == 0) continue;
    const Integer& d = c[i].get_den();
    if (d != 1) mpz_lcm(img.denom.get_mpz_t(), img.denom.get_mpz_t(), d.get_mpz_t());
  }
  for (std::size_t i = 0; i < limit; ++i) {
    if (sgn(c[i]) == 0) continue;
    if (img.denom == 1) {
      img.terms.emplace_back(i, c[i].get_num());
    } else {
      Integer n = c[i].get_num() * (img.denom / c[i].get_den());
      img.terms.emplace_back(i, std::move(n));
    }
  }
  return img;
}

std::vector<Rational> from_integers(std::vector<Integer>&& acc, const Integer& denom) {
  std::vector<Rational> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (sgn(acc[i]) == 0) continue;
    out[i] = Rational(acc[i], denom);
    if (denom != 1) out[i].canonicalize();
  }
  return out;
}

void require_precision(std::int64_t offset24, std::int64_t prec24, const char* what) {
  if (prec24 <= offset24) {
    throw PrecisionUnderflow(std::string(what) + ": precision " + std::to_string(prec24) +
                             " does not exceed offset " + std::to_string(offset24));
  }
}

}  // namespace

QSeries::QSeries(std::int64_t offset24, std::vector<Rational> coeffs, std::int64_t prec24)
    : offset24_(offset24), coeffs_(std::move(coeffs)), prec24_(prec24) {
  require_precision(offset24_, prec24_, "QSeries");
  if (static_cast<std::int64_t>(coeffs_.size()) != prec24_ - offset24_) {
    throw std::invalid_argument("QSeries: coefficient count does not match precision");
  }
}

QSeries QSeries::zero(std::int64_t prec24) {
  std::int64_t off = std::min<std::int64_t>(0, prec24 - 1);
  return QSeries(off, std::vector<Rational>(prec24 - off), prec24);
}

QSeries QSeries::constant(const Rational& c, std::int64_t prec24) {
  require_precision(0, prec24, "constant");
  std::vector<Rational> v(prec24);
  v[0] = c;
  return QSeries(0, std::move(v), prec24);
}

QSeries QSeries::monomial(const Rational& c, std::int64_t exp24, std::int64_t prec24) {
  require_precision(exp24, prec24, "monomial");
  std::vector<Rational> v(prec24 - exp24);
  v[0] = c;
  return QSeries(exp24, std::move(v), prec24);
}

Rational QSeries::at24(std::int64_t e) const {
  if (e >= prec24_) {
    throw PrecisionUnderflow("coefficient q^(" + std::to_string(e) + "/24) is beyond precision " +
                             std::to_string(prec24_));
  }
  if (e < offset24_) return Rational(0);
  return coeffs_[e - offset24_];
}

std::int64_t QSeries::max_integral_exponent() const { return floor_div(prec24_ - 1, 24); }

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool QSeries::has_integral_exponents() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t e = offset24_ + static_cast<std::int64_t>(i);
    if (sgn(coeffs_[i]) != 0 && ((e % 24) + 24) % 24 != 0) return false;
  }
  return true;
}

bool QSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

QSeries& QSeries::operator+=(const QSeries& o) {
  std::int64_t off = std::min(offset24_, o.offset24_);
  std::int64_t prec = std::min(prec24_, o.prec24_);
  require_precision(off, prec, "add");
  std::vector<Rational> v(prec - off);
  for (std::int64_t e = std::max(offset24_, off); e < prec; ++e) v[e - off] = coeffs_[e - offset24_];
  for (std::int64_t e = o.offset24_; e < prec; ++e) {
    const Rational& c = o.coeffs_[e - o.offset24_];
    if (sgn(c) != 0) v[e - off] += c;
  }
  offset24_ = off;
  prec24_ = prec;
  coeffs_ = std::move(v);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) {
    if (sgn(x) != 0) x *= c;
  }
  return *this;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

QSeries QSeries::truncated(std::int64_t prec24) const {
  if (prec24 > prec24_) throw PrecisionUnderflow("truncate: requested precision exceeds known precision");
  require_precision(offset24_, prec24, "truncate");
  std::vector<Rational> v(coeffs_.begin(), coeffs_.begin() + (prec24 - offset24_));
  return QSeries(offset24_, std::move(v), prec24);
}

QSeries QSeries::shifted(std::int64_t s24) const {
  return QSeries(offset24_ + s24, coeffs_, prec24_ + s24);
}

QSeries QSeries::substituted(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("substitute: n must be positive");
  std::int64_t off = offset24_ * n;
  std::int64_t prec = prec24_ * n;
  std::vector<Rational> v(prec - off);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) v[i * n] = coeffs_[i];
  }
  return QSeries(off, std::move(v), prec);
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  std::int64_t off = a.offset24_ + b.offset24_;
  std::int64_t prec = std::min(a.offset24_ + b.prec24_, b.offset24_ + a.prec24_);
  require_precision(off, prec, "multiply");
  std::size_t len = static_cast<std::size_t>(prec - off);
  IntegerImage ia = integer_image(a.coeffs_, len);
  IntegerImage ib = integer_image(b.coeffs_, len);
  std::vector<Integer> acc(len);
  for (const auto& [i, x] : ia.terms) {
    for (const auto& [j, y] : ib.terms) {
      if (i + j >= len) break;
      mpz_addmul(acc[i + j].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
  }
  Integer denom = ia.denom * ib.denom;
  return QSeries(off, from_integers(std::move(acc), denom), prec);
}

bool operator==(const QSeries& a, const QSeries& b) {
  if (a.prec24_ != b.prec24_) return false;
  std::int64_t lo = std::min(a.offset24_, b.offset24_);
  for (std::int64_t e = lo; e < a.prec24_; ++e) {
    if (a.at24(e) != b.at24(e)) return false;
  }
  return true;
}

QSeries invert(const QSeries& a) {
  const auto& c = a.coeffs();
  if (sgn(c[0]) == 0) {
    throw ZeroLeadingCoefficient("invert: leading coefficient is zero");
  }
  std::size_t len = c.size();
  std::int64_t off = -a.offset24();
  std::int64_t prec = a.prec24() - 2 * a.offset24();
  IntegerImage img = integer_image(c, len);
  const Integer& lead = img.terms.front().second;

  if (lead == 1 || lead == -1) {
    std::vector<Integer> b(len);
    b[0] = lead;
    Integer s;
    for (std::size_t n = 1; n < len; ++n) {
      s = 0;
      for (std::size_t t = 1; t < img.terms.size(); ++t) {
        std::size_t k = img.terms[t].first;
        if (k > n) break;
        if (sgn(b[n - k]) != 0) mpz_addmul(s.get_mpz_t(), img.terms[t].second.get_mpz_t(), b[n - k].get_mpz_t());
      }
      b[n] = (lead == 1) ? Integer(-s) : s;
    }
    // a = A / denom, so 1/a = denom / A.
    std::vector<Rational> out(len);
    for (std::size_t i = 0; i < len; ++i) {
      if (sgn(b[i]) != 0) out[i] = Rational(b[i] * img.denom);
    }
    return QSeries(off, std::move(out), prec);
  }

  std::vector<Rational> b(len);
  Rational u = Rational(1) / c[0];
  b[0] = u;
  std::vector<std::pair<std::size_t, Rational>> nz;
  for (std::size_t k = 1; k < len; ++k) {
    if (sgn(c[k]) != 0) nz.emplace_back(k, c[k]);
  }
  Rational s;
  for (std::size_t n = 1; n < len; ++n) {
    s = 0;
    for (const auto& [k, ck] : nz) {
      if (k > n) break;
      if (sgn(b[n - k]) != 0) s += ck * b[n - k];
    }
    b[n] = -u * s;
  }
  return QSeries(off, std::move(b), prec);
}

QSeries pow(const QSeries& a, int e) {
  if (e < 0) return pow(invert(a), -e);
  if (e == 0) return QSeries::constant(1, a.prec24() - a.offset24());
  QSeries result;
  bool have = false;
  QSeries base = a;
  unsigned k = static_cast<unsigned>(e);
  while (true) {
    if (k & 1U) {
      result = have ? result * base : base;
      have = true;
    }
    k >>= 1U;
    if (k == 0) break;
    base = base * base;
  }
  return result;
}

std::vector<Integer> sigma1_table(std::int64_t n) {
  std::vector<Integer> s(static_cast<std::size_t>(std::max<std::int64_t>(n, 0) + 1));
  for (std::int64_t d = 1; d <= n; ++d) {
    for (std::int64_t m = d; m <= n; m += d) s[m] += d;
  }
  return s;
}

QSeries eta(int m, std::int64_t prec24) {
  if (m < 1) throw std::invalid_argument("eta: m must be positive");
  require_precision(m, prec24, "eta");
  std::vector<Rational> v(prec24 - m);
  // Pentagonal exponents k(3k-1)/2 for k = 0, 1, -1, 2, -2, ...
  v[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    std::int64_t p1 = k * (3 * k - 1) / 2;
    std::int64_t p2 = k * (3 * k + 1) / 2;
    std::int64_t e1 = 24 * m * p1;
    if (e1 >= prec24 - m) break;
    int sign = (k % 2 == 0) ? 1 : -1;
    v[e1] = sign;
    std::int64_t e2 = 24 * m * p2;
    if (e2 < prec24 - m) v[e2] = sign;
  }
  return QSeries(m, std::move(v), prec24);
}

QSeries eta_quotient(const std::vector<EtaFactor>& factors, const Rational& scalar, std::int64_t prec24) {
  std::int64_t total = 0;
  for (const auto& f : factors) {
    if (f.m < 1) throw std::invalid_argument("eta_quotient: level must be positive");
    total += static_cast<std::int64_t>(f.m) * f.e;
  }
  std::int64_t rel = prec24 - total;
  if (rel <= 0) throw PrecisionUnderflow("eta_quotient: precision does not exceed leading exponent");
  QSeries result = QSeries::constant(scalar, rel);
  for (const auto& f : factors) {
    if (f.e == 0) continue;
    QSeries base = eta(f.m, f.m + rel);
    result = result * pow(base, f.e);
  }
  return result;
}

QSeries eisenstein_E2(std::int64_t prec24) {
  require_precision(0, prec24, "E2");
  std::int64_t n = integral_terms(prec24);
  auto sig = sigma1_table(n);
  std::vector<Rational> v(prec24);
  v[0] = 1;
  for (std::int64_t k = 1; k < n; ++k) v[24 * k] = Rational(-24 * sig[k]);
  return QSeries(0, std::move(v), prec24);
}

QSeries eisenstein_E2_level(int n, std::int64_t prec24) {
  if (n < 1) throw std::invalid_argument("E2 level must be positive");
  QSeries e2 = eisenstein_E2(prec24);
  if (n == 1) return e2;
  std::int64_t p = (prec24 + n - 1) / n;
  QSeries e2n = eisenstein_E2(p).substituted(n).truncated(prec24);
  QSeries r = e2n * Rational(n) - e2;
  r *= Rational(1, n - 1);
  return r;
}

QSeries theta_nullwert(int index, std::int64_t prec24) {
  if (index < 2 || index > 4) throw std::invalid_argument("theta index must be 2, 3 or 4");
  if (index == 2) {
    require_precision(3, prec24, "theta2");
    std::vector<Rational> v(prec24 - 3);
    for (std::int64_t k = 0;; ++k) {
      std::int64_t e = 12 * k * k + 12 * k + 3;
      if (e >= prec24) break;
      v[e - 3] = 2;
    }
    return QSeries(3, std::move(v), prec24);
  }
  require_precision(0, prec24, "theta");
  std::vector<Rational> v(prec24);
  v[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    std::int64_t e = 12 * k * k;
    if (e >= prec24) break;
    v[e] = (index == 4 && k % 2 == 1) ? -2 : 2;
  }
  return QSeries(0, std::move(v), prec24);
}

QSeries lambert_halfsum(std::int64_t prec24) {
  require_precision(0, prec24, "lambert");
  std::int64_t n_terms = integral_terms(prec24);
  std::vector<Integer> c(n_terms);
  for (std::int64_t n = 1; n * (n + 1) / 2 < n_terms; ++n) {
    int sign = 1;
    for (std::int64_t e = n * (n + 1) / 2; e < n_terms; e += n) {
      c[e] += sign;
      sign = -sign;
    }
  }
  std::vector<Rational> v(prec24);
  v[0] = Rational(1, 4);
  for (std::int64_t e = 1; e < n_terms; ++e) v[24 * e] = Rational(c[e]);
  return QSeries(0, std::move(v), prec24);
}

QSeries F2_series(std::int64_t prec24) {
  require_precision(0, prec24, "F2");
  std::int64_t n_terms = integral_terms(prec24);
  std::vector<Integer> c(n_terms);
  for (std::int64_t m = 1; m * (m + 1) / 2 < n_terms; ++m) {
    for (std::int64_t n = m + 1; m * n / 2 < n_terms; n += 2) {
      if (n % 2 == 0) {
        c[m * n / 2] += m;
      } else {
        c[m * n / 2] -= m;
      }
    }
  }
  std::vector<Rational> v(prec24);
  for (std::int64_t e = 1; e < n_terms; ++e) v[24 * e] = Rational(c[e]);
  return QSeries(0, std::move(v), prec24);
}

QSeries eta_cubed_unit(std::int64_t prec24) {
  require_precision(0, prec24, "eta^3");
  // Jacobi: eta^3 = sum_k (-1)^k (2k+1) q^((2k+1)^2/8)
  std::vector<Rational> v(prec24);
  for (std::int64_t k = 0;; ++k) {
    std::int64_t e = 24 * (k * (k + 1) / 2);
    if (e >= prec24) break;
    v[e] = (k % 2 == 0) ? (2 * k + 1) : -(2 * k + 1);
  }
  return QSeries(0, std::move(v), prec24);
}

}  // namespace mathieu
