#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mathieu/m24.hpp"
#include "mathieu/twining.hpp"

namespace mathieu {

// Bound on |Z_{n/2;h}(3/4)| with D = 1 - 8k. Here n = 2|g|.
double error_term_bound(std::int64_t k, std::int64_t n, std::int64_t h);

// K^{23/7} coefficient implied by the bound above, for comparison with the tabulated a_g 10^{b_g}.
double error_constant_estimate(std::int64_t n_g, std::int64_t h_g);

enum class BoundMode { analytic, exact };

struct ClassBound {
  std::string label;
  int order = 1;
  Integer centralizer;
  double table_constant = 0;  // a_g 10^{b_g}
  double upper = 0;           // bound on |H_k(g)|, or the exact value
  double ratio = 0;           // (H_k(1)/|M24|) / (|H_k(g)|/|C(g)|)
};

struct BoundReport {
  std::int64_t k = 0;
  BoundMode mode = BoundMode::analytic;
  double identity_lower = 0;  // lower bound on H_k(1), or the exact value
  std::vector<ClassBound> classes;  // g != 1, in class order
  bool certificate = false;
};

// Analytic bounds; requires k >= 150.
BoundReport character_bounds(std::int64_t k, const M24Data& data);

// H_k(1)/|M24| > sum_{g != 1} |H_k(g)|/|C(g)|, exactly from H.
BoundReport exact_bounds(std::int64_t k, const M24Data& data, const HeadCharacterMatrix& H);

bool positivity_certificate(std::int64_t k, BoundMode mode, const M24Data& data,
                            const HeadCharacterMatrix* H = nullptr);

}  // namespace mathieu
