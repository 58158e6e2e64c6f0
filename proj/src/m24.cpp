#include "mathieu/m24.hpp"

#include <cmath>
#include <cstdlib>
#include <algorithm>
#include <numeric>

#include "mathieu/records.hpp"

#ifndef MATHIEU_DEFAULT_DATA_DIR
#define MATHIEU_DEFAULT_DATA_DIR "data"
#endif

namespace mathieu {

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("MATHIEU_DATA_DIR"); env != nullptr && *env != '\0')
    return env;
  return MATHIEU_DEFAULT_DATA_DIR;
}

namespace {

// Exact element of Q(sqrt(-7), sqrt(-15), sqrt(-23)) as coefficients on products of the roots.
class MultiQuad {
public:
  void add_product(const QuadIrr& x, const QuadIrr& y, const Rational& scale) {
    for (auto [cx, mx] : parts(x))
      for (auto [cy, my] : parts(y)) {
        Rational c = cx * cy * scale;
        for (unsigned bit = 0; bit < 3; ++bit)
          if ((mx & my) & (1u << bit)) c *= -kRoots[bit];
        terms_[mx ^ my] += c;
      }
  }
  bool equals(const QuadIrr& v) const {
    try {
      return value() == v;
    } catch (const IncompatibleDiscriminant&) {
      return false;
    }
  }
  // The value as a QuadIrr; throws if it has components in more than one field.
  QuadIrr value() const {
    QuadIrr out;
    for (const auto& [mask, c] : terms_) {
      if (c == 0) continue;
      if (mask == 0) {
        out += QuadIrr(c);
      } else if (mask == 1 || mask == 2 || mask == 4) {
        out += QuadIrr(0, c, kRoots[mask == 1 ? 0 : mask == 2 ? 1 : 2]);
      } else {
        throw IncompatibleDiscriminant("value outside a single quadratic field");
      }
    }
    return out;
  }

private:
  static constexpr int kRoots[3] = {7, 15, 23};
  static unsigned mask_of(int d) {
    for (unsigned bit = 0; bit < 3; ++bit)
      if (kRoots[bit] == d) return 1u << bit;
    throw IncompatibleDiscriminant("unsupported discriminant " + std::to_string(d));
  }
  static std::vector<std::pair<Rational, unsigned>> parts(const QuadIrr& x) {
    std::vector<std::pair<Rational, unsigned>> out{{x.real(), 0u}};
    if (x.disc() != 0) out.emplace_back(x.sqrt_coeff(), mask_of(x.disc()));
    return out;
  }
  std::map<unsigned, Rational> terms_;
};

}  // namespace

QuadIrr::QuadIrr(const Rational& a, const Rational& b, int d) : a_(a), b_(b), d_(d) {
  if (d < 0) throw std::invalid_argument("QuadIrr: negative d");
  normalize();
}

void QuadIrr::normalize() {
  if (b_ == 0 || d_ == 0) {
    b_ = 0;
    d_ = 0;
  }
}

QuadIrr QuadIrr::parse(std::string_view text) {
  auto c1 = text.find(',');
  if (c1 == std::string_view::npos) return QuadIrr(parse_rational(text));
  auto c2 = text.find(',', c1 + 1);
  if (c2 == std::string_view::npos) throw DataError("bad character value: " + std::string(text));
  Rational s = parse_rational(text.substr(0, c1));
  Rational t = parse_rational(text.substr(c1 + 1, c2 - c1 - 1));
  Rational d = parse_rational(text.substr(c2 + 1));
  if (d.get_den() != 1 || d <= 0) throw DataError("bad discriminant in " + std::string(text));
  return QuadIrr(s / 2, t / 2, static_cast<int>(d.get_num().get_si()));
}

bool QuadIrr::is_algebraic_integer() const {
  if (d_ == 0) return a_.get_den() == 1;
  Rational a2 = a_ * 2, b2 = b_ * 2;
  if (a2.get_den() != 1 || b2.get_den() != 1) return false;
  if (d_ % 4 == 3) {
    Integer s = a2.get_num() + b2.get_num();
    return mpz_even_p(s.get_mpz_t()) != 0;
  }
  return a_.get_den() == 1 && b_.get_den() == 1;
}

std::complex<double> QuadIrr::to_complex() const {
  return {a_.get_d(), b_.get_d() * std::sqrt(static_cast<double>(d_))};
}

std::string QuadIrr::to_string() const {
  if (d_ == 0) return a_.get_str();
  std::string s = a_ == 0 ? "" : a_.get_str();
  Rational b = b_;
  if (b < 0) {
    s += "-";
    b = -b;
  } else if (!s.empty()) {
    s += "+";
  }
  if (b != 1) s += b.get_str() + "*";
  return s + "sqrt(-" + std::to_string(d_) + ")";
}

QuadIrr& QuadIrr::operator+=(const QuadIrr& o) {
  if (o.d_ != 0 && d_ != 0 && o.d_ != d_)
    throw IncompatibleDiscriminant("sqrt(-" + std::to_string(d_) + ") + sqrt(-" +
                                   std::to_string(o.d_) + ")");
  a_ += o.a_;
  b_ += o.b_;
  if (d_ == 0) d_ = o.d_;
  normalize();
  return *this;
}

QuadIrr& QuadIrr::operator-=(const QuadIrr& o) { return *this += o * Rational(-1); }

QuadIrr& QuadIrr::operator*=(const Rational& c) {
  a_ *= c;
  b_ *= c;
  normalize();
  return *this;
}

QuadIrr operator*(const QuadIrr& x, const QuadIrr& y) {
  if (x.d_ != 0 && y.d_ != 0 && x.d_ != y.d_)
    throw IncompatibleDiscriminant("product across discriminants");
  int d = x.d_ != 0 ? x.d_ : y.d_;
  Rational a = x.a_ * y.a_ - Rational(d) * x.b_ * y.b_;
  Rational b = x.a_ * y.b_ + x.b_ * y.a_;
  return QuadIrr(a, b, d);
}

double ClassInfo::bound_constant() const { return bound_mantissa * std::pow(10.0, bound_exponent); }

int gamma0_index(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("gamma0_index: n must be positive");
  std::int64_t idx = n, m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    idx = idx / p * (p + 1);
  }
  if (m > 1) idx = idx / m * (m + 1);
  return static_cast<int>(idx);
}

M24Data M24Data::load(const std::filesystem::path& dir) {
  M24Data d;
  std::vector<std::string> header;
  for (auto& rec : read_records(dir / "m24_character_table.txt")) {
    if (rec[0] == "classes") {
      header.assign(rec.begin() + 1, rec.end());
      if (header.size() != kNumClasses) throw DataError("character table: expected 26 classes");
      continue;
    }
    if (rec.size() != kNumClasses + 1) throw DataError("character table: bad row " + rec[0]);
    ClassFunction row;
    for (std::size_t k = 0; k < kNumClasses; ++k) row[k] = QuadIrr::parse(rec[k + 1]);
    d.irreps_.push_back(rec[0]);
    d.table_.push_back(row);
  }
  if (d.table_.size() != kNumClasses) throw DataError("character table: expected 26 irreps");

  for (auto& rec : read_records(dir / "m24_classes.txt")) {
    if (rec[0] == "group_order") {
      d.group_order_ = Integer(rec.at(1));
      continue;
    }
    if (rec.size() != 9) throw DataError("class data: bad row " + rec[0]);
    ClassInfo c;
    c.label = rec[0];
    c.order = std::stoi(rec[1]);
    c.merged = rec[2];
    c.h = std::stoi(rec[3]);
    c.w = std::stoi(rec[4]);
    c.centralizer = Integer(rec[5]);
    c.gamma0_index = std::stoi(rec[6]);
    c.bound_mantissa = std::stod(rec[7]);
    c.bound_exponent = std::stoi(rec[8]);
    d.classes_.push_back(c);
  }
  if (d.classes_.size() != kNumClasses) throw DataError("class data: expected 26 classes");
  for (std::size_t k = 0; k < kNumClasses; ++k)
    if (header.at(k) != d.classes_[k].label) throw DataError("class order mismatch at " + header[k]);

  d.conjugates_.resize(kNumClasses);
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    ClassFunction c;
    for (std::size_t k = 0; k < kNumClasses; ++k) c[k] = d.table_[i][k].conj();
    std::size_t j = 0;
    while (j < kNumClasses && d.table_[j] != c) ++j;
    if (j == kNumClasses) throw DataError("no conjugate for " + d.irreps_[i]);
    d.conjugates_[i] = j;
  }
  d.validate();
  return d;
}

void M24Data::validate() const {
  Rational total;
  for (const auto& c : classes_) {
    if (group_order_ % c.centralizer != 0) throw DataError("centralizer does not divide |G|: " + c.label);
    total += Rational(group_order_) / Rational(c.centralizer);
    if (std::gcd(c.order, 12) % c.h != 0) throw DataError("h_g does not divide gcd(|g|,12): " + c.label);
    if (gamma0_index(c.order) != c.gamma0_index) throw DataError("Gamma0 index mismatch: " + c.label);
  }
  if (total != Rational(group_order_)) throw DataError("class equation fails");

  std::size_t triv = irrep_index("rho0"), std_rep = irrep_index("rho1");
  for (std::size_t k = 0; k < kNumClasses; ++k) {
    if (!(table_[triv][k] == QuadIrr(1))) throw DataError("rho0 is not trivial");
    if (!(QuadIrr(classes_[k].w) == QuadIrr(1) + table_[std_rep][k]))
      throw DataError("w_g != 1 + rho1(g) at " + classes_[k].label);
    for (const auto& row : table_)
      if (!row[k].is_algebraic_integer()) throw DataError("non-integral character value");
  }

  for (std::size_t i = 0; i < kNumClasses; ++i)
    for (std::size_t j = 0; j < kNumClasses; ++j)
      if (!(inner_product(table_[i], table_[j]) == QuadIrr(i == j ? 1 : 0)))
        throw DataError("row orthogonality fails for " + irreps_[i] + ", " + irreps_[j]);

  for (std::size_t k = 0; k < kNumClasses; ++k)
    for (std::size_t l = 0; l < kNumClasses; ++l) {
      MultiQuad s;
      for (const auto& row : table_) s.add_product(row[k], row[l].conj(), 1);
      QuadIrr want = k == l ? QuadIrr(Rational(classes_[k].centralizer)) : QuadIrr(0);
      if (!s.equals(want)) throw DataError("column orthogonality fails at " + classes_[k].label);
    }
}

std::size_t M24Data::class_index(std::string_view label) const {
  for (std::size_t k = 0; k < classes_.size(); ++k)
    if (classes_[k].label == label) return k;
  throw std::out_of_range("unknown class " + std::string(label));
}

std::size_t M24Data::irrep_index(std::string_view label) const {
  for (std::size_t i = 0; i < irreps_.size(); ++i)
    if (irreps_[i] == label) return i;
  throw std::out_of_range("unknown irrep " + std::string(label));
}

std::size_t M24Data::conjugate_irrep(std::size_t irrep) const { return conjugates_.at(irrep); }

std::vector<std::string> M24Data::merged_labels() const {
  std::vector<std::string> out;
  for (const auto& c : classes_)
    if (out.empty() || out.back() != c.merged) out.push_back(c.merged);
  return out;
}

const ClassInfo& M24Data::merged_info(std::string_view merged) const {
  for (const auto& c : classes_)
    if (c.merged == merged) return c;
  throw std::out_of_range("unknown merged class " + std::string(merged));
}

std::string M24Data::merged_of(std::string_view label) const {
  return classes_.at(class_index(label)).merged;
}

QuadIrr M24Data::inner_product(const ClassFunction& f, const ClassFunction& g) const {
  // Terms from different classes may live in different quadratic fields.
  MultiQuad acc;
  for (std::size_t k = 0; k < kNumClasses; ++k)
    acc.add_product(f[k], g[k].conj(), Rational(1) / Rational(classes_[k].centralizer));
  return acc.value();
}

Multiplicities M24Data::decompose(const ClassFunction& f) const {
  Multiplicities m;
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    QuadIrr v = inner_product(f, table_[i]);
    if (!v.is_rational()) throw std::domain_error("non-rational multiplicity for " + irreps_[i]);
    m[i] = v.real();
  }
  return m;
}

std::vector<EvennessRow> load_evenness_table(const std::filesystem::path& dir) {
  std::vector<EvennessRow> rows;
  for (auto& rec : read_records(dir / "evenness_levels.txt")) {
    if (rec.size() != 3) throw DataError("evenness table: bad row " + rec[0]);
    rows.push_back({rec[0], std::stoll(rec[1]), std::stoll(rec[2])});
  }
  return rows;
}

namespace {

std::map<std::string, Integer> integral_combination(const std::map<std::string, Rational>& c) {
  std::map<std::string, Integer> out;
  for (const auto& [sym, v] : c) {
    if (v.get_den() != 1) throw DataError("non-integral coefficient for " + sym);
    out[sym] = v.get_num();
  }
  return out;
}

ConwayIdentity parse_identity(const std::vector<std::string>& rec) {
  auto eq = std::find(rec.begin(), rec.end(), "=");
  if (eq == rec.end()) throw DataError("identity without '='");
  ConwayIdentity id;
  for (auto it = rec.begin() + 1; it != rec.end(); ++it) id.text += (id.text.empty() ? "" : " ") + *it;
  id.lhs = integral_combination(parse_linear_combination({rec.begin() + 1, eq}));
  id.rhs = integral_combination(parse_linear_combination({eq + 1, rec.end()}));
  return id;
}

}  // namespace

ConwayData ConwayData::load(const std::filesystem::path& dir) {
  ConwayData c;
  for (auto& rec : read_records(dir / "conway.txt")) {
    if (rec[0] == "match" && rec.size() == 3) {
      c.class_matching.emplace_back(rec[1], rec[2]);
    } else if (rec[0] == "dim" && rec.size() == 3) {
      c.dimensions.emplace_back(rec[1], Integer(rec[2]));
    } else if (rec[0] == "identity") {
      c.identities.push_back(parse_identity(rec));
    } else if (rec[0] == "relation") {
      c.relations.push_back(parse_identity(rec));
    } else if (rec[0] == "erratum") {
      c.errata.push_back(parse_identity(rec));
    } else {
      throw DataError("conway data: unknown record " + rec[0]);
    }
  }
  return c;
}

}  // namespace mathieu
