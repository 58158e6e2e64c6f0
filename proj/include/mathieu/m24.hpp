#pragma once

#include <array>
#include <complex>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mathieu/series.hpp"

namespace mathieu {

inline constexpr std::size_t kNumClasses = 26;

class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IncompatibleDiscriminant : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Directory holding the versioned data assets. MATHIEU_DATA_DIR overrides the built-in default.
std::filesystem::path data_directory();

// a + b*sqrt(-d) with a, b rational and d in {0, 7, 15, 23}.
class QuadIrr {
public:
  QuadIrr() = default;
  QuadIrr(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadIrr(long a) : a_(a) {}             // NOLINT(google-explicit-constructor)
  QuadIrr(const Rational& a, const Rational& b, int d);

  // Accepts "n", "p/q" or "s,t,d" meaning (s + t*i*sqrt(d))/2.
  static QuadIrr parse(std::string_view text);

  const Rational& real() const { return a_; }
  const Rational& sqrt_coeff() const { return b_; }
  int disc() const { return d_; }
  bool is_rational() const { return d_ == 0; }

  QuadIrr conj() const { return QuadIrr(a_, -b_, d_); }
  bool is_algebraic_integer() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  QuadIrr& operator+=(const QuadIrr& o);
  QuadIrr& operator-=(const QuadIrr& o);
  QuadIrr& operator*=(const Rational& c);

  friend QuadIrr operator+(QuadIrr x, const QuadIrr& y) { return x += y; }
  friend QuadIrr operator-(QuadIrr x, const QuadIrr& y) { return x -= y; }
  friend QuadIrr operator*(QuadIrr x, const Rational& c) { return x *= c; }
  friend QuadIrr operator*(const QuadIrr& x, const QuadIrr& y);
  friend bool operator==(const QuadIrr& x, const QuadIrr& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

private:
  void normalize();
  Rational a_, b_;
  int d_ = 0;
};

using ClassFunction = std::array<QuadIrr, kNumClasses>;
using Multiplicities = std::array<Rational, kNumClasses>;

struct ClassInfo {
  std::string label;
  int order = 1;
  std::string merged;
  int h = 1;
  int w = 0;
  Integer centralizer;
  int gamma0_index = 1;
  double bound_mantissa = 0;
  int bound_exponent = 0;

  double bound_constant() const;
};

class M24Data {
public:
  static M24Data load(const std::filesystem::path& dir = data_directory());

  const Integer& group_order() const { return group_order_; }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  const std::vector<std::string>& irreps() const { return irreps_; }
  const ClassFunction& character(std::size_t irrep) const { return table_.at(irrep); }
  const QuadIrr& value(std::size_t irrep, std::size_t cls) const { return table_.at(irrep).at(cls); }

  std::size_t class_index(std::string_view label) const;
  std::size_t irrep_index(std::string_view label) const;
  // Index of the complex-conjugate irrep (itself when real).
  std::size_t conjugate_irrep(std::size_t irrep) const;
  bool is_real_irrep(std::size_t irrep) const { return conjugate_irrep(irrep) == irrep; }

  // Merged labels (7AB etc.) in class order, one per distinct twining form.
  std::vector<std::string> merged_labels() const;
  const ClassInfo& merged_info(std::string_view merged) const;
  std::string merged_of(std::string_view label) const;

  // <f, g> = sum_K f(K) conj(g(K)) / |C(K)|
  QuadIrr inner_product(const ClassFunction& f, const ClassFunction& g) const;
  // Multiplicities of each irrep; throws when one is not rational.
  Multiplicities decompose(const ClassFunction& f) const;

private:
  Integer group_order_;
  std::vector<ClassInfo> classes_;
  std::vector<std::string> irreps_;
  std::vector<ClassFunction> table_;
  std::vector<std::size_t> conjugates_;

  void validate() const;
};

int gamma0_index(std::int64_t n);

// Rows of the evenness table: real irrep, level N_rho and depth m_rho/6 as printed.
struct EvennessRow {
  std::string irrep;
  std::int64_t level = 0;
  std::int64_t depth = 0;
};
std::vector<EvennessRow> load_evenness_table(const std::filesystem::path& dir = data_directory());

struct ConwayIdentity {
  std::string text;
  std::map<std::string, Integer> lhs;
  std::map<std::string, Integer> rhs;
};

struct ConwayData {
  std::vector<std::pair<std::string, std::string>> class_matching;  // M24 class -> Co1 class
  std::vector<std::pair<std::string, Integer>> dimensions;          // Co0 irreps, smallest first
  std::vector<ConwayIdentity> identities;                           // M24 side = Co0 side
  std::vector<ConwayIdentity> relations;                            // Co0 side = Co0 side
  std::vector<ConwayIdentity> errata;  // amended forms of printed identities, keyed by lhs

  static ConwayData load(const std::filesystem::path& dir = data_directory());
};

}  // namespace mathieu
