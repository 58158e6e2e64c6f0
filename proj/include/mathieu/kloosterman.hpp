#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mathieu/series.hpp"

namespace mathieu {

using Complex = std::complex<double>;

// e(x) = exp(2 pi i x), with x reduced mod 1 exactly before rounding.
Complex e_of(const Rational& x);

// Exact Dedekind sum s(h, k) = sum_{mu=1}^{k} ((mu/k)) ((h mu/k)).
Rational dedekind_sum(std::int64_t h, std::int64_t k);

// omega_{d,c} as an exact phase r with omega = e(r), from the Jacobi-symbol closed form.
// d is reduced into [1, c) first; requires c > 0 and gcd(d, c) = 1.
Rational omega_phase(std::int64_t d, std::int64_t c);
Complex omega(std::int64_t d, std::int64_t c);
// exp(pi i s(d, c)), the product definition.
Complex omega_dedekind(std::int64_t d, std::int64_t c);

// Multiplier of eta at (a b; c d) in SL2(Z) with c > 0: eta(g tau) = eps (c tau + d)^(1/2) eta(tau).
Complex eta_multiplier(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
// eta(tau) numerically from the pentagonal series; requires Im tau > 0.
Complex eta_numeric(Complex tau);

struct MultiplierParams {
  std::int64_t n = 1;  // |g|
  std::int64_t h = 1;  // h | n
};

enum class KloostermanMethod { direct, sparse };

struct KloostermanValue {
  Complex value;
  KloostermanMethod method = KloostermanMethod::sparse;
  std::int64_t k = 0, n = 1, h = 1, c = 1;
};

KloostermanValue kloosterman(std::int64_t k, MultiplierParams p, std::int64_t c, KloostermanMethod method);

// Generalized Kloosterman sum for Gamma0(n) with multiplier eps^-3 rho_{n;h}, summed directly.
Complex kloosterman_direct(std::int64_t k, std::int64_t n, std::int64_t h, std::int64_t c);
// The same sum from square roots of 1 - 8k + 8c^2 n/h modulo 8nc.
Complex kloosterman_sparse(std::int64_t k, std::int64_t n, std::int64_t h, std::int64_t c);

// All x in [0, m) with x^2 = a (mod m), sorted. m > 0.
std::vector<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t m);

// c-th term and partial sums of the Rademacher series for H_k(g), |g| = n.
double rademacher_term(std::int64_t k, std::int64_t n, std::int64_t h, std::int64_t c);
double rademacher_partial(std::int64_t k, std::int64_t n, std::int64_t h, std::int64_t cmax);

// Partial sum of Z_{n;h}(s) = sum_c S(k, nc) (nc)^(-2s).
Complex kloosterman_zeta_partial(std::int64_t k, std::int64_t n, std::int64_t h, double s,
                                 std::int64_t cmax);

// sqrt(2 / (pi x)) sinh(x)
double bessel_i_half(double x);

// Number of positive divisors.
std::int64_t divisor_count(std::int64_t k);

// Complete Kloosterman sum S(v, u; k) over 1 <= h <= k with gcd(h, k) = 1.
Complex complete_kloosterman(std::int64_t v, std::int64_t u, std::int64_t k);

struct IncompleteKloosterman {
  Complex value;
  double bound = 0;
};

// sum over h1 <= h <= h2, gcd(h, k) = 1, of e(u h'/k), with the Weil-type bound on its modulus.
IncompleteKloosterman incomplete_kloosterman(std::int64_t u, std::int64_t k, std::int64_t h1,
                                             std::int64_t h2);

}  // namespace mathieu
