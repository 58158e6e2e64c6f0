#include "mathieu/twining.hpp"

#include <algorithm>

#include "mathieu/records.hpp"

namespace mathieu {

namespace {

EtaFactor parse_factor(const std::string& tok) {
  auto caret = tok.find('^');
  EtaFactor f{std::stoi(tok.substr(0, caret)), 1};
  if (caret != std::string::npos) f.e = std::stoi(tok.substr(caret + 1));
  if (f.m <= 0) throw DataError("bad eta factor " + tok);
  return f;
}

Integer require_integer(const Rational& r, const std::string& where) {
  if (r.get_den() != 1)
    throw NonIntegralCoefficient(where + " is " + r.get_str() + ", not an integer");
  return r.get_num();
}

}  // namespace

FormLibrary FormLibrary::load(const std::filesystem::path& dir) {
  FormLibrary lib;
  for (auto& rec : read_records(dir / "twining_forms.txt")) {
    if (rec[0] == "form") {
      lib.recipes_.push_back(FormRecipe{rec.at(1), {}, {}, {}});
      continue;
    }
    if (lib.recipes_.empty()) throw DataError("twining forms: record before first form");
    FormRecipe& r = lib.recipes_.back();
    if (rec[0] == "E2" && rec.size() == 3) {
      r.e2_terms.emplace_back(std::stoi(rec[1]), parse_rational(rec[2]));
    } else if (rec[0] == "eta" && rec.size() >= 3) {
      EtaTerm t{parse_rational(rec[1]), {}};
      for (std::size_t i = 2; i < rec.size(); ++i) t.factors.push_back(parse_factor(rec[i]));
      r.eta_terms.push_back(std::move(t));
    } else if (rec[0] == "printed") {
      for (std::size_t i = 1; i < rec.size(); ++i) r.printed.push_back(parse_rational(rec[i]));
    } else {
      throw DataError("twining forms: bad record " + rec[0]);
    }
  }
  return lib;
}

const FormRecipe& FormLibrary::recipe(std::string_view merged_label) const {
  for (const auto& r : recipes_)
    if (r.label == merged_label) return r;
  throw std::out_of_range("no twining form for " + std::string(merged_label));
}

QSeries build_series(const FormRecipe& recipe, std::int64_t prec24) {
  // Eta products can start at q^3 or later; work past that and cut back.
  const std::int64_t work = std::max<std::int64_t>(prec24, 24 * 8);
  QSeries f = QSeries::zero(work);
  for (const auto& [n, c] : recipe.e2_terms) f += eisenstein_E2_level(n, work) * c;
  for (const auto& t : recipe.eta_terms) f += eta_quotient(t.factors, t.coefficient, work);
  if (work != prec24) f = f.truncated(prec24);
  if (!f.has_integral_exponents())
    throw DataError("twining form " + recipe.label + " has fractional exponents");
  return f;
}

TwiningForm build_fg(std::string_view merged_label, std::int64_t prec24, const M24Data& data,
                     const FormLibrary& lib) {
  const ClassInfo& info = data.merged_info(merged_label);
  TwiningForm f;
  f.label = std::string(merged_label);
  f.series = build_series(lib.recipe(merged_label), prec24);
  f.level = info.order * info.h;
  f.multiplier_order = info.h;
  return f;
}

ClassFunction HeadCharacterMatrix::class_function(std::int64_t n) const {
  ClassFunction out;
  const auto& r = row(n);
  for (std::size_t k = 0; k < kNumClasses; ++k) out[k] = QuadIrr(Rational(r[k]));
  return out;
}

HeadCharacterMatrix head_characters(std::int64_t nmax, std::int64_t prec24, const M24Data& data,
                                    const FormLibrary& lib) {
  if (nmax < 0) throw std::invalid_argument("head_characters: nmax must be nonnegative");
  if (prec24 < 24 * (nmax + 2))
    throw std::invalid_argument("head_characters: prec24 must be at least 24 (nmax + 2)");

  QSeries unit_inv = invert(eta_cubed_unit(prec24));
  QSeries base = (F2_series(prec24) * Rational(48) - eisenstein_E2(prec24) * Rational(2)) * unit_inv;

  std::vector<std::array<Integer, kNumClasses>> rows(nmax + 1);
  for (const auto& merged : data.merged_labels()) {
    const ClassInfo& info = data.merged_info(merged);
    QSeries f = build_series(lib.recipe(merged), prec24);
    QSeries h = base * (Rational(info.w) / 24) - f * unit_inv;
    for (std::int64_t n = 0; n <= nmax; ++n) {
      Integer v = require_integer(h.coeff(n), "H_" + std::to_string(n) + "(" + merged + ")");
      for (std::size_t k = 0; k < kNumClasses; ++k)
        if (data.classes()[k].merged == merged) rows[n][k] = v;
    }
  }

  ClassFunction h00 = data.character(data.irrep_index("rho1"));
  for (auto& v : h00) v -= QuadIrr(3);
  return HeadCharacterMatrix(std::move(rows), std::move(h00));
}

CrosscheckResult crosscheck_fg(std::string_view merged_label, const HeadCharacterMatrix& H,
                               const M24Data& data, const FormLibrary& lib) {
  std::int64_t nmax = H.nmax();
  std::int64_t prec24 = 24 * (nmax + 1);
  const ClassInfo& info = data.merged_info(merged_label);
  std::size_t cls = data.class_index(info.label);

  QSeries t3 = theta_nullwert(3, prec24), t4 = theta_nullwert(4, prec24);
  QSeries t3t4 = t3 * t4;
  Rational w(info.w);
  QSeries lhs = (pow(t3, 4) + pow(t4, 4)) * (w / 12) - t3t4 * lambert_halfsum(prec24) * w;

  std::vector<Rational> hs(prec24);
  for (std::int64_t n = 0; n <= nmax; ++n) hs[24 * n] = Rational(H.at(n, cls));
  lhs -= eta_cubed_unit(prec24) * QSeries(0, std::move(hs), prec24);

  QSeries f = build_series(lib.recipe(merged_label), prec24);
  CrosscheckResult res;
  for (std::int64_t n = 0; n <= nmax; ++n) {
    if (lhs.coeff(n) != f.coeff(n)) {
      res.ok = false;
      res.first_mismatch = n;
      break;
    }
  }
  return res;
}

bool evenness_pattern(const Multiplicities& m, const M24Data& data) {
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    std::size_t j = data.conjugate_irrep(i);
    if (j != i) {
      if (m[i] != m[j]) return false;
    } else {
      if (m[i].get_den() != 1 || mpz_odd_p(m[i].get_num_mpz_t())) return false;
    }
  }
  return true;
}

bool conway_restriction_check(const Multiplicities& m, const M24Data& data) {
  for (const auto& x : m)
    if (x.get_den() != 1) throw std::domain_error("conway_restriction_check: non-integral multiplicity");
  auto at = [&](const char* label) { return m[data.irrep_index(label)].get_num(); };
  for (const char* r : {"rho2", "rho3", "rho8", "rho10"}) {
    std::size_t i = data.irrep_index(r);
    if (m[i] != m[data.conjugate_irrep(i)]) return false;
  }
  Integer parity = at("rho9") + at("rho14") - at("rho15");
  return mpz_even_p(parity.get_mpz_t()) != 0;
}

std::vector<MultiplicityRow> multiplicity_table(const HeadCharacterMatrix& H, const M24Data& data) {
  std::vector<MultiplicityRow> out;
  for (std::int64_t n = 0; n <= H.nmax(); ++n) {
    MultiplicityRow row;
    row.n = n;
    row.mult = data.decompose(H.class_function(n));
    for (const auto& x : row.mult) {
      if (x.get_den() != 1) row.integral = false;
      if (x < 0) row.nonnegative = false;
    }
    row.even_pattern = row.integral && evenness_pattern(row.mult, data);
    row.conway_ok = row.integral && conway_restriction_check(row.mult, data);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<DimensionBalance> conway_dimension_check(const ConwayData& conway, const M24Data& data) {
  std::map<std::string, Integer> dim{{"1", 1}};
  for (const auto& [sym, d] : conway.dimensions) dim[sym] = d;
  for (std::size_t i = 0; i < kNumClasses; ++i)
    dim[data.irreps()[i]] = data.value(i, 0).real().get_num();
  auto eval = [&](const std::map<std::string, Integer>& side) {
    Integer total;
    for (const auto& [sym, c] : side) {
      auto it = dim.find(sym);
      if (it == dim.end()) throw DataError("unknown representation " + sym);
      total += c * it->second;
    }
    return total;
  };

  std::vector<DimensionBalance> out;
  auto push = [&](const ConwayIdentity& id, bool relation) {
    DimensionBalance b;
    b.text = id.text;
    b.lhs = eval(id.lhs);
    b.rhs = eval(id.rhs);
    b.balanced = b.lhs == b.rhs;
    b.relation = relation;
    for (const auto& e : conway.errata)
      if (e.lhs == id.lhs) b.amended_rhs = eval(e.rhs);
    out.push_back(std::move(b));
  };
  for (const auto& id : conway.identities) push(id, false);
  for (const auto& id : conway.relations) push(id, true);
  return out;
}

}  // namespace mathieu
