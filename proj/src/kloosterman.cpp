#include "mathieu/kloosterman.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace mathieu {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  Integer r;
  Integer A(static_cast<long>(mod(a, m))), M(static_cast<long>(m));
  if (mpz_invert(r.get_mpz_t(), A.get_mpz_t(), M.get_mpz_t()) == 0)
    throw std::domain_error("no inverse modulo " + std::to_string(m));
  return r.get_si();
}

int jacobi(std::int64_t a, std::int64_t n) {
  Integer A(static_cast<long>(a)), N(static_cast<long>(n));
  return mpz_jacobi(A.get_mpz_t(), N.get_mpz_t());
}

Rational frac_part(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rational(fl);
}

// ((x)) for x = a/b
Rational sawtooth(std::int64_t a, std::int64_t b) {
  if (mod(a, b) == 0) return 0;
  Rational r(static_cast<long>(mod(a, b)), static_cast<long>(b));
  r.canonicalize();
  return r - Rational(1, 2);
}

Rational ratio(std::int64_t a, std::int64_t b) {
  Rational r(static_cast<long>(a), static_cast<long>(b));
  r.canonicalize();
  return r;
}

std::int64_t power_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % m);
    b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

// A square root of a modulo an odd prime p, with a a nonzero quadratic residue.
std::int64_t tonelli_shanks(std::int64_t a, std::int64_t p) {
  a = mod(a, p);
  if (p % 4 == 3) return power_mod(a, (p + 1) / 4, p);
  std::int64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (power_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s, c = power_mod(z, q, p), t = power_mod(a, q, p), r = power_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    std::int64_t b = c;
    for (std::int64_t j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

std::vector<std::int64_t> sqrt_mod_brute(std::int64_t a, std::int64_t m) {
  std::vector<std::int64_t> out;
  a = mod(a, m);
  for (std::int64_t x = 0; x < m; ++x)
    if (static_cast<std::int64_t>(static_cast<__int128>(x) * x % m) == a) out.push_back(x);
  return out;
}

std::vector<std::int64_t> sqrt_mod_prime_power(std::int64_t a, std::int64_t p, int e) {
  std::int64_t pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  a = mod(a, pe);
  if (pe <= 64 || a % p == 0) return sqrt_mod_brute(a, pe);
  if (p == 2) {
    // a odd: lift the roots mod 8 one bit at a time.
    std::vector<std::int64_t> roots = sqrt_mod_brute(a % 8, 8);
    for (std::int64_t m = 8; m < pe; m *= 2) {
      std::vector<std::int64_t> next;
      for (std::int64_t r : roots)
        for (std::int64_t cand : {r, r + m})
          if (static_cast<std::int64_t>(static_cast<__int128>(cand) * cand % (2 * m)) == a % (2 * m))
            next.push_back(cand);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      roots = std::move(next);
    }
    return roots;
  }
  if (jacobi(a % p, p) != 1) return {};
  std::int64_t r = tonelli_shanks(a % p, p), pk = p;
  for (int k = 1; k < e; ++k) {
    pk *= p;
    std::int64_t f = mod(static_cast<std::int64_t>(static_cast<__int128>(r) * r % pk) - a % pk, pk);
    r = mod(r - static_cast<std::int64_t>(static_cast<__int128>(f) * inverse_mod(2 * r, pk) % pk), pk);
  }
  std::vector<std::int64_t> out{r, mod(-r, pe)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Complex e_of(const Rational& x) {
  double t = 2 * std::numbers::pi * frac_part(x).get_d();
  return {std::cos(t), std::sin(t)};
}

Rational dedekind_sum(std::int64_t h, std::int64_t k) {
  if (k <= 0) throw std::invalid_argument("dedekind_sum: k must be positive");
  Rational s;
  for (std::int64_t mu = 1; mu <= k; ++mu) s += sawtooth(mu, k) * sawtooth(h * mu, k);
  return s;
}

Rational omega_phase(std::int64_t d, std::int64_t c) {
  if (c <= 0) throw std::invalid_argument("omega: c must be positive");
  if (std::gcd(d, c) != 1) throw std::domain_error("omega: gcd(d, c) != 1");
  if (c == 1) return 0;
  d = mod(d, c);
  std::int64_t dp = inverse_mod(d, c);
  // (c - 1/c)(2d + d' - d^2 d') / 24
  Rational tail = Rational(static_cast<long>(c * c - 1)) / Rational(static_cast<long>(24 * c)) *
                  Rational(static_cast<long>(2 * d + dp - d * d * dp));
  Rational r;
  int sym;
  if (c % 2 == 1) {
    sym = jacobi(-d, c);
    r = -ratio(c - 1, 8) - tail;
  } else {
    sym = jacobi(-c, d);
    r = -ratio(2 - c * d - d, 8) - tail;
  }
  if (sym == -1) r += Rational(1, 2);
  if (sym == 0) throw std::logic_error("omega: vanishing Jacobi symbol");
  return frac_part(r);
}

Complex omega(std::int64_t d, std::int64_t c) { return e_of(omega_phase(d, c)); }

Complex omega_dedekind(std::int64_t d, std::int64_t c) {
  if (std::gcd(d, c) != 1) throw std::domain_error("omega: gcd(d, c) != 1");
  return e_of(dedekind_sum(d, c) / 2);
}

Complex eta_multiplier(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (a * d - b * c != 1) throw std::invalid_argument("eta_multiplier: determinant is not 1");
  if (c <= 0) throw std::invalid_argument("eta_multiplier: c must be positive");
  Complex pre(1 / std::numbers::sqrt2, -1 / std::numbers::sqrt2);
  return pre * e_of(omega_phase(-d, c) + ratio(a + d, 24 * c));
}

Complex eta_numeric(Complex tau) {
  if (tau.imag() <= 0) throw std::domain_error("eta_numeric: tau must lie in the upper half plane");
  const Complex two_pi_i(0, 2 * std::numbers::pi);
  // sum_k (-1)^k q^(k(3k-1)/2) over k in Z
  std::complex<long double> sum = 1;
  for (long k = 1;; ++k) {
    long double sgn = k % 2 ? -1 : 1;
    double e1 = k * (3.0 * k - 1) / 2, e2 = k * (3.0 * k + 1) / 2;
    if (2 * std::numbers::pi * tau.imag() * e1 > 80) break;
    sum += sgn * (std::complex<long double>(std::exp(two_pi_i * tau * e1)) +
                  std::complex<long double>(std::exp(two_pi_i * tau * e2)));
  }
  return std::exp(two_pi_i * tau / 24.0) * Complex(sum);
}

Complex kloosterman_direct(std::int64_t k, std::int64_t n, std::int64_t h, std::int64_t c) {
  if (n <= 0 || h <= 0 || c <= 0 || n % h != 0) throw std::invalid_argument("kloosterman: need n, h, c > 0 and h | n");
  std::int64_t N = n * c;
  Complex sum = 0;
  for (std::int64_t d = 1; d <= N; ++d) {
    if (std::gcd(d, N) != 1) continue;
    Rational phase = -3 * omega_phase(d, N) - ratio(c * d, h) + ratio(k * d, N);
    sum += e_of(phase);
  }
  return sum;
}

std::vector<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("sqrt_mod: modulus must be positive");
  std::vector<std::int64_t> roots{0};
  std::int64_t modulus = 1, rest = m;
  for (std::int64_t p = 2; p * p <= rest || rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    int e = 0;
    std::int64_t pe = 1;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
      ++e;
    }
    std::vector<std::int64_t> local = sqrt_mod_prime_power(a, p, e);
    std::vector<std::int64_t> merged;
    // CRT: x = r (mod modulus), x = s (mod pe)
    std::int64_t inv = inverse_mod(modulus, pe);
    for (std::int64_t r : roots)
      for (std::int64_t s : local) {
        std::int64_t t = mod(static_cast<std::int64_t>(static_cast<__int128>(mod(s - r, pe)) * inv % pe), pe);
        merged.push_back(r + modulus * t);
      }
    roots = std::move(merged);
    modulus *= pe;
    if (roots.empty()) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Complex kloosterman_sparse(std::int64_t k, std::int64_t n, std::int64_t h, std::int64_t c) {
  if (n <= 0 || h <= 0 || c <= 0 || n % h != 0) throw std::invalid_argument("kloosterman: need n, h, c > 0 and h | n");
  std::int64_t N = n * c;
  std::int64_t a = 1 - 8 * k + 8 * c * c * (n / h);
  Complex sum = 0;
  for (std::int64_t m : sqrt_mod(a, 8 * N)) {
    if (m >= 4 * N) break;
    double sgn = ((m - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    sum += sgn * e_of(ratio(m, 4 * N));
  }
  return Complex(0, -0.5 * std::sqrt(static_cast<double>(N))) * sum;
}

KloostermanValue kloosterman(std::int64_t k, MultiplierParams p, std::int64_t c, KloostermanMethod method) {
  KloostermanValue v{{}, method, k, p.n, p.h, c};
  v.value = method == KloostermanMethod::direct ? kloosterman_direct(k, p.n, p.h, c)
                                                : kloosterman_sparse(k, p.n, p.h, c);
  return v;
}

double bessel_i_half(double x) { return std::sqrt(2 / (std::numbers::pi * x)) * std::sinh(x); }

double rademacher_term(std::int64_t k, std::int64_t n, std::int64_t h, std::int64_t c) {
  double s8 = std::sqrt(8.0 * k - 1);
  double x = std::numbers::pi * s8 / (2.0 * c * n);
  double i_half = bessel_i_half(x);
  Complex S = kloosterman_sparse(k, n, h, c);
  return (4 * std::numbers::pi / std::pow(8.0 * k - 1, 0.25) / (double(n) * c) * i_half * S).real();
}

double rademacher_partial(std::int64_t k, std::int64_t n, std::int64_t h, std::int64_t cmax) {
  double sum = 0;
  for (std::int64_t c = 1; c <= cmax; ++c) sum += rademacher_term(k, n, h, c);
  return sum;
}

Complex kloosterman_zeta_partial(std::int64_t k, std::int64_t n, std::int64_t h, double s,
                                 std::int64_t cmax) {
  Complex sum = 0;
  for (std::int64_t c = 1; c <= cmax; ++c)
    sum += kloosterman_sparse(k, n, h, c) * std::pow(double(n) * c, -2 * s);
  return sum;
}

std::int64_t divisor_count(std::int64_t k) {
  if (k <= 0) throw std::invalid_argument("divisor_count: k must be positive");
  std::int64_t count = 1;
  for (std::int64_t p = 2; p * p <= k; ++p) {
    int e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    count *= e + 1;
  }
  return k > 1 ? count * 2 : count;
}

Complex complete_kloosterman(std::int64_t v, std::int64_t u, std::int64_t k) {
  if (k <= 0) throw std::invalid_argument("complete_kloosterman: k must be positive");
  Complex sum = 0;
  for (std::int64_t h = 1; h <= k; ++h)
    if (std::gcd(h, k) == 1) sum += e_of(ratio(mod(v * h + u * inverse_mod(h, k), k), k));
  return sum;
}

IncompleteKloosterman incomplete_kloosterman(std::int64_t u, std::int64_t k, std::int64_t h1,
                                             std::int64_t h2) {
  if (k <= 0) throw std::invalid_argument("incomplete_kloosterman: k must be positive");
  if (h1 > h2) throw std::invalid_argument("incomplete_kloosterman: need h1 <= h2");
  IncompleteKloosterman r;
  for (std::int64_t h = h1; h <= h2; ++h)
    if (std::gcd(h, k) == 1) r.value += e_of(ratio(mod(u * inverse_mod(h, k), k), k));
  double g = static_cast<double>(std::gcd(u, k));
  r.bound = (double(k + h2 - h1) / k + 2 + 2 * std::log(double(k))) * std::sqrt(double(k)) *
            std::sqrt(g) * double(divisor_count(k));
  return r;
}

}  // namespace mathieu
