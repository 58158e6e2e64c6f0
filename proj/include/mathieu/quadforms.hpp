#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mathieu {

// [a, b, c] = a x^2 + b xy + c y^2 with integer coefficients.
struct BinQF {
  std::int64_t a = 0, b = 0, c = 0;

  std::int64_t disc() const { return b * b - 4 * a * c; }
  std::int64_t operator()(std::int64_t x, std::int64_t y) const { return a * x * x + b * x * y + c * y * y; }
  bool positive_definite() const { return a > 0 && disc() < 0; }
  bool reduced() const;
  bool primitive() const;
  std::string to_string() const;
  bool operator==(const BinQF&) const = default;
};

// Q(p x + q y, r x + s y)
BinQF act(const BinQF& Q, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);

// Gauss reduction; throws std::domain_error unless Q is positive-definite.
BinQF reduce_form(const BinQF& Q);

// Reduced forms of discriminant D, in order of (a, b). D < 0 and D = 0, 1 mod 4.
std::vector<BinQF> reduced_forms(std::int64_t D, bool primitive_only = true);

struct ClassNumbers {
  std::int64_t h = 0;       // primitive classes
  std::int64_t hprime = 0;  // all classes, sum of h(D/m^2) over m^2 | D
};

ClassNumbers class_numbers(std::int64_t D);

// sqrt|D| / pi (2 + log|D|)
double class_number_bound(std::int64_t D);

// (a, b/h; n c, d) with determinant a d - (n/h) b c = 1.
struct Gamma0nhMatrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;
  std::int64_t n = 1, h = 1;

  std::int64_t nprime() const { return n / h; }
  std::int64_t det() const { return a * d - nprime() * b * c; }
  Gamma0nhMatrix operator*(const Gamma0nhMatrix& o) const;
};

// a c = b d (mod h); throws std::invalid_argument if the determinant is not 1.
bool gamma0nh_member(const Gamma0nhMatrix& M);

// A member of Gamma0(n;h) with first column (a, n c), if one exists.
std::optional<Gamma0nhMatrix> complete_gamma0nh(std::int64_t a, std::int64_t c, std::int64_t n,
                                                std::int64_t h);

// (Q; r, ns) with Q = [n alpha, beta, gamma/h].
struct RootTriple {
  std::int64_t n = 1, h = 1;
  std::int64_t alpha = 0, beta = 0, gamma = 0;
  std::int64_t r = 0, s = 0;

  std::int64_t disc() const { return beta * beta - 4 * (n / h) * alpha * gamma; }
  // Q(r, ns) / n
  std::int64_t C() const;
  // Q(M v) with v -> M^{-1} v, so the value Q(r, ns) is preserved.
  RootTriple transformed(const Gamma0nhMatrix& M) const;
};

struct RootValue {
  std::int64_t m = 0;        // reduced into [0, modulus)
  std::int64_t C = 0;
  std::int64_t modulus = 0;  // 2 n C
};

// The root m mod 2nC. For h = 1 then m^2 = D (mod 4nC); otherwise m^2 = D + 4 C^2 n/h (mod 4nC).
// Throws std::domain_error if gcd(r, (n/h) s) != 1 or no completion exists.
RootValue root_map(const RootTriple& t);

// #{0 <= m < 2nC : m^2 = target (mod 4nC)}
std::int64_t root_count(std::int64_t target, std::int64_t n, std::int64_t C);

// prod over primes p < 2^(1/eps) of 1 / (eps ln p e^(1 - eps ln p)), so d(m) <= C_eps m^eps.
double divisor_bound_const(double epsilon);

}  // namespace mathieu
