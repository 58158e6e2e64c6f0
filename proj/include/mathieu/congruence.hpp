#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mathieu/m24.hpp"
#include "mathieu/twining.hpp"

namespace mathieu {

struct Congruence {
  int p = 0;
  std::string cls;
  int pi = 0;
  std::vector<std::string> section;
  int printed_depth = 0;
  Integer modulus;                          // relation on H_n(g)
  std::map<std::string, Rational> relation;  // split class label -> coefficient
  Integer form_modulus;                     // equivalent statement on the forms
  int level = 1;
  std::map<std::string, Rational> form;      // f<class> or E2_<n> -> coefficient
  std::string text;
};

std::vector<Congruence> load_congruences(const std::filesystem::path& dir = data_directory());

// ceil(k [SL2(Z) : Gamma0(N)] / 12)
int sturm_bound(int level, int weight = 2);

// Sum of the form combination, exact to q^depth.
QSeries form_combination(const Congruence& c, std::int64_t depth, const M24Data& data,
                         const FormLibrary& lib);

struct CongruenceResult {
  Congruence congruence;
  int sturm = 0;
  std::int64_t depth_checked = 0;
  bool form_ok = false;
  std::optional<std::int64_t> form_first_failure;
  Rational constant_term;
  bool characters_ok = false;  // relation holds on every rational irreducible orbit character
  bool relation_ok = false;    // relation holds on the computed H_n
  std::optional<std::int64_t> relation_first_failure;

  bool passed() const { return form_ok && characters_ok && relation_ok; }
};

// depth_factor scales the Sturm bound; 1 is the bound itself.
CongruenceResult verify_congruence(const Congruence& c, int depth_factor, const M24Data& data,
                                   const FormLibrary& lib, const HeadCharacterMatrix& H);

std::vector<CongruenceResult> thompson_suite(int depth_factor, const M24Data& data,
                                             const FormLibrary& lib, const HeadCharacterMatrix& H,
                                             const std::filesystem::path& dir = data_directory());

// Rational-valued characters: rho for real rho, rho + conj(rho) for complex pairs.
std::vector<std::pair<std::string, ClassFunction>> rational_orbit_characters(const M24Data& data);

struct EvennessResult {
  EvennessRow printed;
  std::int64_t computed_level = 0;
  std::int64_t computed_depth = 0;
  std::int64_t depth_checked = 0;
  bool even_ok = false;
  std::optional<std::int64_t> first_failure;

  bool level_matches() const { return printed.level == computed_level; }
  bool depth_matches() const { return printed.depth == computed_depth; }
};

// Level N_rho: lcm of |g| h_g over classes outside the odd-centralizer set with rho(g) != 0.
std::int64_t evenness_level(std::size_t irrep, const M24Data& data);

// Checks that mult_rho(H_n) is even for n up to max(printed, computed) depth.
std::vector<EvennessResult> evenness_suite(const std::vector<MultiplicityRow>& rows,
                                           const M24Data& data,
                                           const std::filesystem::path& dir = data_directory());

}  // namespace mathieu
