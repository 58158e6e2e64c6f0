#include "mathieu/quadforms.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <tuple>

namespace mathieu {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

// x, y with a x + b y = gcd(a, b) >= 0
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    std::int64_t q = floor_div(a, b);
    std::tie(a, b) = std::make_tuple(b, a - q * b);
    std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
    std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

void check_discriminant(std::int64_t D) {
  if (D >= 0 || (mod(D, 4) != 0 && mod(D, 4) != 1))
    throw std::invalid_argument("discriminant must be negative and 0 or 1 mod 4, got " + std::to_string(D));
}

}  // namespace

bool BinQF::reduced() const {
  if (!(std::abs(b) <= a && a <= c)) return false;
  if ((std::abs(b) == a || a == c) && b < 0) return false;
  return true;
}

bool BinQF::primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }

std::string BinQF::to_string() const {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
}

BinQF act(const BinQF& Q, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  return {Q(p, r), 2 * Q.a * p * q + Q.b * (p * s + q * r) + 2 * Q.c * r * s, Q(q, s)};
}

BinQF reduce_form(const BinQF& Q) {
  if (!Q.positive_definite())
    throw std::domain_error("reduce_form: " + Q.to_string() + " is not positive-definite");
  const std::int64_t D = Q.disc();
  BinQF f = Q;
  for (;;) {
    if (f.b > f.a || f.b <= -f.a) {
      std::int64_t t = floor_div(f.a - f.b, 2 * f.a);
      f.b += 2 * f.a * t;
      f.c = (f.b * f.b - D) / (4 * f.a);
    }
    if (f.a > f.c) {
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
  }
}

std::vector<BinQF> reduced_forms(std::int64_t D, bool primitive_only) {
  check_discriminant(D);
  std::vector<BinQF> out;
  for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      BinQF f{a, b, num / (4 * a)};
      if (!f.reduced()) continue;
      if (primitive_only && !f.primitive()) continue;
      out.push_back(f);
    }
  }
  return out;
}

ClassNumbers class_numbers(std::int64_t D) {
  check_discriminant(D);
  ClassNumbers r;
  r.h = static_cast<std::int64_t>(reduced_forms(D).size());
  for (std::int64_t m = 1; m * m <= -D; ++m) {
    if (D % (m * m) != 0) continue;
    std::int64_t E = D / (m * m);
    if (mod(E, 4) == 0 || mod(E, 4) == 1) r.hprime += static_cast<std::int64_t>(reduced_forms(E).size());
  }
  if (!(static_cast<double>(r.h) < class_number_bound(D)))
    throw std::logic_error("class number bound fails at D = " + std::to_string(D));
  return r;
}

double class_number_bound(std::int64_t D) {
  double a = std::fabs(static_cast<double>(D));
  return std::sqrt(a) / std::numbers::pi * (2 + std::log(a));
}

Gamma0nhMatrix Gamma0nhMatrix::operator*(const Gamma0nhMatrix& o) const {
  if (n != o.n || h != o.h) throw std::invalid_argument("Gamma0nhMatrix: mismatched (n, h)");
  std::int64_t np = nprime();
  return {a * o.a + np * b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, np * c * o.b + d * o.d, n, h};
}

bool gamma0nh_member(const Gamma0nhMatrix& M) {
  if (M.h <= 0 || M.n <= 0 || M.n % M.h != 0) throw std::invalid_argument("gamma0nh_member: need h | n");
  if (M.det() != 1) throw std::invalid_argument("gamma0nh_member: determinant is not 1");
  return mod(M.a * M.c - M.b * M.d, M.h) == 0;
}

std::optional<Gamma0nhMatrix> complete_gamma0nh(std::int64_t a, std::int64_t c, std::int64_t n,
                                                std::int64_t h) {
  if (h <= 0 || n <= 0 || n % h != 0) throw std::invalid_argument("complete_gamma0nh: need h | n");
  std::int64_t np = n / h;
  auto [g, x, y] = ext_gcd(a, np * c);
  if (g != 1) return std::nullopt;
  // a x + np c y = 1, so (a, -y/h; n c, x) has determinant 1.
  for (std::int64_t L = 0; L < h; ++L) {
    Gamma0nhMatrix M{a, -y + L * a, c, x + L * np * c, n, h};
    if (gamma0nh_member(M)) return M;
  }
  return std::nullopt;
}

std::int64_t RootTriple::C() const { return alpha * r * r + beta * r * s + (n / h) * gamma * s * s; }

RootTriple RootTriple::transformed(const Gamma0nhMatrix& M) const {
  if (M.n != n || M.h != h) throw std::invalid_argument("RootTriple: mismatched (n, h)");
  const std::int64_t np = n / h, a = M.a, b = M.b, c = M.c, d = M.d;
  RootTriple t = *this;
  t.alpha = alpha * a * a + beta * a * c + np * gamma * c * c;
  t.beta = 2 * np * alpha * a * b + beta * (a * d + np * b * c) + 2 * gamma * np * c * d;
  t.gamma = np * alpha * b * b + beta * b * d + gamma * d * d;
  t.r = d * r - np * b * s;
  t.s = a * s - c * r;
  return t;
}

RootValue root_map(const RootTriple& t) {
  if (t.h <= 0 || t.n <= 0 || t.n % t.h != 0) throw std::invalid_argument("root_map: need h | n");
  RootValue v;
  v.C = t.C();
  if (v.C <= 0) throw std::domain_error("root_map: Q(r, ns) must be positive");
  auto M = complete_gamma0nh(t.r, t.s, t.n, t.h);
  if (!M) throw std::domain_error("root_map: no completion of (r, ns) in the group");
  const std::int64_t np = t.n / t.h, rt = M->b, st = M->d;
  std::int64_t m = 2 * np * t.alpha * t.r * rt + t.beta * (t.r * st + np * t.s * rt) + 2 * t.gamma * np * t.s * st;
  v.modulus = 2 * t.n * v.C;
  v.m = mod(m, v.modulus);
  return v;
}

std::int64_t root_count(std::int64_t target, std::int64_t n, std::int64_t C) {
  if (n <= 0 || C <= 0) throw std::invalid_argument("root_count: need n, C > 0");
  std::int64_t count = 0;
  for (std::int64_t m = 0; m < 2 * n * C; ++m)
    if (mod(m * m - target, 4 * n * C) == 0) ++count;
  return count;
}

double divisor_bound_const(double epsilon) {
  if (!(epsilon > 0) || epsilon > 0.5) throw std::invalid_argument("divisor_bound_const: need 0 < eps <= 1/2");
  const double limit = std::pow(2.0, 1 / epsilon);
  if (limit > 1e8) throw std::invalid_argument("divisor_bound_const: eps too small");
  const auto P = static_cast<std::size_t>(std::ceil(limit));
  std::vector<bool> composite(P + 1, false);
  double prod = 1;
  for (std::size_t p = 2; p < P + 1 && static_cast<double>(p) < limit; ++p) {
    if (composite[p]) continue;
    for (std::size_t q = p * p; q <= P; q += p) composite[q] = true;
    double lp = std::log(static_cast<double>(p));
    prod *= 1 / (epsilon * lp * std::exp(1 - epsilon * lp));
  }
  return prod;
}

}  // namespace mathieu
