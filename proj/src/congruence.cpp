#include "mathieu/congruence.hpp"

#include <numeric>
#include <sstream>

#include "mathieu/records.hpp"

namespace mathieu {

namespace {

bool divisible(const Rational& x, const Integer& m) {
  if (x.get_den() != 1) return false;
  return mpz_divisible_p(x.get_num_mpz_t(), m.get_mpz_t()) != 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream ss(s);
  for (std::string t; std::getline(ss, t, sep);) out.push_back(t);
  return out;
}

}  // namespace

std::vector<Congruence> load_congruences(const std::filesystem::path& dir) {
  std::vector<Congruence> out;
  Congruence current;
  bool have_pair = false;
  for (auto& rec : read_records(dir / "congruences.txt")) {
    if (rec[0] == "pair" && rec.size() == 6) {
      current = Congruence{};
      current.p = std::stoi(rec[1]);
      current.cls = rec[2];
      current.pi = std::stoi(rec[3]);
      current.section = split(rec[4], ',');
      current.printed_depth = std::stoi(rec[5]);
      have_pair = true;
      continue;
    }
    if (rec[0] != "rel" || !have_pair) throw DataError("congruences: bad record " + rec[0]);
    auto bar = std::find(rec.begin(), rec.end(), "|");
    if (bar == rec.end() || rec.end() - bar < 4) throw DataError("congruences: malformed rel line");
    Congruence c = current;
    c.modulus = Integer(rec.at(1));
    c.relation = parse_linear_combination({rec.begin() + 2, bar});
    c.form_modulus = Integer(*(bar + 1));
    c.level = std::stoi(*(bar + 2));
    c.form = parse_linear_combination({bar + 3, rec.end()});
    for (auto it = rec.begin() + 1; it != rec.end(); ++it) c.text += (c.text.empty() ? "" : " ") + *it;
    out.push_back(std::move(c));
  }
  return out;
}

int sturm_bound(int level, int weight) {
  int m = gamma0_index(level) * weight;
  return (m + 11) / 12;
}

QSeries form_combination(const Congruence& c, std::int64_t depth, const M24Data& data,
                         const FormLibrary& lib) {
  std::int64_t prec24 = 24 * (depth + 1);
  QSeries sum = QSeries::zero(prec24);
  std::map<std::string, QSeries> cache;
  for (const auto& [sym, coef] : c.form) {
    if (sym.rfind("E2_", 0) == 0) {
      sum += eisenstein_E2_level(std::stoi(sym.substr(3)), prec24) * coef;
    } else if (sym.size() > 1 && sym[0] == 'f') {
      std::string merged = data.merged_of(sym.substr(1));
      auto it = cache.find(merged);
      if (it == cache.end()) it = cache.emplace(merged, build_series(lib.recipe(merged), prec24)).first;
      sum += it->second * coef;
    } else {
      throw DataError("congruences: unknown form symbol " + sym);
    }
  }
  return sum;
}

std::vector<std::pair<std::string, ClassFunction>> rational_orbit_characters(const M24Data& data) {
  std::vector<std::pair<std::string, ClassFunction>> out;
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    std::size_t j = data.conjugate_irrep(i);
    if (j < i) continue;
    ClassFunction psi = data.character(i);
    std::string name = data.irreps()[i];
    if (j != i) {
      for (std::size_t k = 0; k < kNumClasses; ++k) psi[k] += data.value(j, k);
      name += "+" + data.irreps()[j];
    }
    out.emplace_back(name, psi);
  }
  return out;
}

CongruenceResult verify_congruence(const Congruence& c, int depth_factor, const M24Data& data,
                                   const FormLibrary& lib, const HeadCharacterMatrix& H) {
  if (depth_factor < 1) throw std::invalid_argument("depth factor must be positive");
  CongruenceResult r;
  r.congruence = c;
  r.sturm = sturm_bound(c.level);
  r.depth_checked = static_cast<std::int64_t>(r.sturm) * depth_factor;

  QSeries f = form_combination(c, r.depth_checked, data, lib);
  r.constant_term = f.coeff(0);
  r.form_ok = true;
  for (std::int64_t l = 1; l <= r.depth_checked; ++l) {
    if (!divisible(f.coeff(l), c.form_modulus)) {
      r.form_ok = false;
      r.form_first_failure = l;
      break;
    }
  }

  std::vector<std::pair<std::size_t, Rational>> terms;
  for (const auto& [label, coef] : c.relation) terms.emplace_back(data.class_index(label), coef);

  r.characters_ok = true;
  for (const auto& [name, psi] : rational_orbit_characters(data)) {
    Rational s;
    for (const auto& [k, coef] : terms) {
      if (!psi[k].is_rational()) throw std::logic_error("orbit character " + name + " is not rational");
      s += coef * psi[k].real();
    }
    if (!divisible(s, c.modulus)) r.characters_ok = false;
  }

  r.relation_ok = true;
  for (std::int64_t n = 0; n <= H.nmax(); ++n) {
    Rational s;
    for (const auto& [k, coef] : terms) s += coef * Rational(H.at(n, k));
    if (!divisible(s, c.modulus)) {
      r.relation_ok = false;
      r.relation_first_failure = n;
      break;
    }
  }
  return r;
}

std::vector<CongruenceResult> thompson_suite(int depth_factor, const M24Data& data,
                                             const FormLibrary& lib, const HeadCharacterMatrix& H,
                                             const std::filesystem::path& dir) {
  std::vector<CongruenceResult> out;
  for (const auto& c : load_congruences(dir)) out.push_back(verify_congruence(c, depth_factor, data, lib, H));
  return out;
}

std::int64_t evenness_level(std::size_t irrep, const M24Data& data) {
  static const std::vector<std::string> kept = {"1A", "2A", "2B", "3A", "3B", "4A", "4B", "4C",
                                                "5A", "6A", "6B", "8A", "10A", "12A", "12B"};
  std::int64_t level = 1;
  for (const auto& label : kept) {
    std::size_t k = data.class_index(label);
    if (data.value(irrep, k) == QuadIrr(0)) continue;
    const ClassInfo& c = data.classes()[k];
    level = std::lcm(level, static_cast<std::int64_t>(c.order) * c.h);
  }
  return level;
}

std::vector<EvennessResult> evenness_suite(const std::vector<MultiplicityRow>& rows,
                                           const M24Data& data, const std::filesystem::path& dir) {
  std::vector<EvennessResult> out;
  for (const auto& printed : load_evenness_table(dir)) {
    EvennessResult r;
    r.printed = printed;
    std::size_t i = data.irrep_index(printed.irrep);
    r.computed_level = evenness_level(i, data);
    r.computed_depth = (gamma0_index(r.computed_level) + 5) / 6;
    r.depth_checked = std::max(printed.depth, r.computed_depth);
    r.even_ok = true;
    for (std::int64_t n = 0; n <= r.depth_checked; ++n) {
      if (n >= static_cast<std::int64_t>(rows.size())) {
        r.even_ok = false;
        r.first_failure = n;
        break;
      }
      const Rational& m = rows[n].mult[i];
      if (m.get_den() != 1 || mpz_odd_p(m.get_num_mpz_t())) {
        r.even_ok = false;
        r.first_failure = n;
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace mathieu
