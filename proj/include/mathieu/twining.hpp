#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mathieu/m24.hpp"
#include "mathieu/series.hpp"

namespace mathieu {

class NonIntegralCoefficient : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct EtaTerm {
  Rational coefficient;
  std::vector<EtaFactor> factors;
};

struct FormRecipe {
  std::string label;
  std::vector<std::pair<int, Rational>> e2_terms;  // coefficient of E2^(n)
  std::vector<EtaTerm> eta_terms;
  std::vector<Rational> printed;  // published leading coefficients
};

class FormLibrary {
public:
  static FormLibrary load(const std::filesystem::path& dir = data_directory());

  const FormRecipe& recipe(std::string_view merged_label) const;
  const std::vector<FormRecipe>& recipes() const { return recipes_; }

private:
  std::vector<FormRecipe> recipes_;
};

struct TwiningForm {
  std::string label;
  QSeries series;
  int weight = 2;
  int level = 1;             // |g| h_g
  int multiplier_order = 1;  // order of the character on Gamma0(|g|)
};

QSeries build_series(const FormRecipe& recipe, std::int64_t prec24);
TwiningForm build_fg(std::string_view merged_label, std::int64_t prec24, const M24Data& data,
                     const FormLibrary& lib);

// H_n(g) for 0 <= n <= nmax on all 26 classes.
class HeadCharacterMatrix {
public:
  HeadCharacterMatrix() = default;
  HeadCharacterMatrix(std::vector<std::array<Integer, kNumClasses>> rows, ClassFunction h00)
      : rows_(std::move(rows)), h00_(std::move(h00)) {}

  std::int64_t nmax() const { return static_cast<std::int64_t>(rows_.size()) - 1; }
  const Integer& at(std::int64_t n, std::size_t cls) const { return rows_.at(n).at(cls); }
  const std::array<Integer, kNumClasses>& row(std::int64_t n) const { return rows_.at(n); }
  ClassFunction class_function(std::int64_t n) const;
  // The virtual constant-term character rho1 - 3 (value 20 at the identity).
  const ClassFunction& h00() const { return h00_; }

private:
  std::vector<std::array<Integer, kNumClasses>> rows_;
  ClassFunction h00_;
};

// Requires prec24 >= 24 (nmax + 2). Throws NonIntegralCoefficient rather than rounding.
HeadCharacterMatrix head_characters(std::int64_t nmax, std::int64_t prec24, const M24Data& data,
                                    const FormLibrary& lib);

struct CrosscheckResult {
  bool ok = true;
  std::optional<std::int64_t> first_mismatch;
};

// Rebuilds f_g from theta constants and the head characters and compares with build_fg.
CrosscheckResult crosscheck_fg(std::string_view merged_label, const HeadCharacterMatrix& H,
                               const M24Data& data, const FormLibrary& lib);

struct MultiplicityRow {
  std::int64_t n = 0;
  Multiplicities mult;
  bool integral = true;
  bool nonnegative = true;
  bool even_pattern = true;
  bool conway_ok = true;
};

// Evenness: real irreps with even multiplicity, complex pairs with equal multiplicity.
bool evenness_pattern(const Multiplicities& m, const M24Data& data);
std::vector<MultiplicityRow> multiplicity_table(const HeadCharacterMatrix& H, const M24Data& data);

// True iff the multiplicities satisfy the Co0 restriction criterion.
bool conway_restriction_check(const Multiplicities& m, const M24Data& data);

struct DimensionBalance {
  std::string text;
  Integer lhs, rhs;
  bool balanced = false;
  bool relation = false;        // Co0-only relation rather than an M24 identity
  std::optional<Integer> amended_rhs;  // from a recorded erratum, if any
};

std::vector<DimensionBalance> conway_dimension_check(const ConwayData& conway, const M24Data& data);

}  // namespace mathieu
