#include "mathieu/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "mathieu/bounds.hpp"
#include "mathieu/congruence.hpp"
#include "mathieu/kloosterman.hpp"
#include "mathieu/quadforms.hpp"

namespace mathieu {

using nlohmann::json;

namespace {

struct Context {
  const RunConfig& cfg;
  M24Data data = M24Data::load();
  FormLibrary lib = FormLibrary::load();

  explicit Context(const RunConfig& c) : cfg(c) {}

  std::int64_t prec24_for(std::int64_t nmax) const {
    std::int64_t need = 24 * (nmax + 2);
    if (cfg.prec24 == 0) return need;
    if (cfg.prec24 < need)
      throw ConfigError("--prec24 " + std::to_string(cfg.prec24) + " is below 24 (n_max + 2) = " + std::to_string(need));
    return cfg.prec24;
  }

  HeadCharacterMatrix heads(std::int64_t nmax) const { return head_characters(nmax, prec24_for(nmax), data, lib); }

  // Accepts split (7A) or merged (7AB) labels.
  const ClassInfo& resolve(const std::string& label) const {
    for (const auto& c : data.classes())
      if (c.merged == label || c.label == label) return data.merged_info(c.merged);
    throw ConfigError("unknown class " + label);
  }
};

std::string str(const Integer& z) { return z.get_str(); }
std::string str(const Rational& q) { return q.get_str(); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string decomposition(const Multiplicities& m, const M24Data& data) {
  std::vector<std::size_t> order(kNumClasses);
  for (std::size_t i = 0; i < kNumClasses; ++i) order[i] = i;
  auto key = [&](std::size_t i) {
    std::size_t base = std::min(i, data.conjugate_irrep(i));
    return std::pair<long, long>(-static_cast<long>(base), i == base ? 0 : 1);
  };
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return key(x) < key(y); });
  std::string out;
  for (std::size_t i : order) {
    const Rational& c = m[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const std::string& name = data.irreps()[i];
    if (name == "rho0")
      out += str(a);
    else
      out += (a == 1 ? "" : str(a) + " ") + name;
  }
  return out.empty() ? "0" : out;
}

std::vector<std::int64_t> k_range(const RunConfig& cfg, std::int64_t lo, std::int64_t hi) {
  if (cfg.k) return {*cfg.k};
  std::vector<std::int64_t> out;
  for (std::int64_t k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

Report headchars(Context& ctx) {
  Report r;
  auto H = ctx.heads(ctx.cfg.n_max);
  auto rows = multiplicity_table(H, ctx.data);
  r.header = ctx.data.irreps();
  json list = json::array();
  for (const auto& row : rows) {
    json values = json::array(), mult = json::array();
    for (std::size_t k = 0; k < kNumClasses; ++k) values.push_back(str(H.at(row.n, k)));
    for (const auto& x : row.mult) mult.push_back(str(x));
    std::string dec = decomposition(row.mult, ctx.data);
    list.push_back({{"n", row.n}, {"values", values}, {"multiplicities", mult}, {"decomposition", dec}});
    if (row.n == 0) continue;
    if (!row.integral) r.fail("H_" + std::to_string(row.n) + " has a non-integral multiplicity");
    std::vector<std::string> csv;
    for (const auto& x : row.mult) csv.push_back(str(x));
    r.rows.push_back(std::move(csv));
    r.text.push_back("H_" + std::to_string(row.n) + " = " + dec);
  }
  r.results = {{"classes", [&] {
                  json c = json::array();
                  for (const auto& info : ctx.data.classes()) c.push_back(info.label);
                  return c;
                }()},
               {"rows", list}};
  return r;
}

Report verify_integrality(Context& ctx) {
  Report r;
  auto H = ctx.heads(ctx.cfg.n_max);
  r.header = {"p", "class", "pi", "modulus", "form_modulus", "level", "sturm", "form_ok", "form_ok_5x",
              "characters_ok", "relation_ok"};
  json pairs = json::array();
  std::map<std::pair<int, std::string>, int> distinct;
  auto at1 = thompson_suite(1, ctx.data, ctx.lib, H);
  auto at5 = thompson_suite(5, ctx.data, ctx.lib, H);
  for (std::size_t i = 0; i < at1.size(); ++i) {
    const auto& a = at1[i];
    const auto& b = at5[i];
    const auto& c = a.congruence;
    distinct[{c.p, c.cls}] = 1;
    bool ok = a.passed() && b.passed();
    if (!ok) r.fail("(" + std::to_string(c.p) + "," + c.cls + "): " + c.text);
    pairs.push_back({{"p", c.p},
                     {"class", c.cls},
                     {"pi", c.pi},
                     {"relation", c.text},
                     {"modulus", str(c.modulus)},
                     {"form_modulus", str(c.form_modulus)},
                     {"level", c.level},
                     {"printed_depth", c.printed_depth},
                     {"sturm", a.sturm},
                     {"depth_checked", b.depth_checked},
                     {"form_ok", a.form_ok},
                     {"form_ok_5x", b.form_ok},
                     {"constant_term", str(a.constant_term)},
                     {"characters_ok", a.characters_ok},
                     {"relation_ok", a.relation_ok}});
    r.rows.push_back({std::to_string(c.p), c.cls, std::to_string(c.pi), str(c.modulus), str(c.form_modulus),
                      std::to_string(c.level), std::to_string(a.sturm), str(a.form_ok), str(b.form_ok),
                      str(a.characters_ok), str(a.relation_ok)});
    r.text.push_back("(" + std::to_string(c.p) + "," + c.cls + ") " + c.text + " : " + (ok ? "ok" : "FAILED"));
  }
  auto rows = multiplicity_table(H, ctx.data);
  json bad = nullptr;
  for (const auto& row : rows) {
    if (row.n == 0 || (row.integral && row.nonnegative)) continue;
    bad = row.n;
    r.fail("H_" + std::to_string(row.n) + " is not a character");
    break;
  }
  r.text.push_back("H_n integral and nonnegative for 1 <= n <= " + std::to_string(ctx.cfg.n_max) + ": " +
                   (bad.is_null() ? "ok" : "FAILED"));
  r.results = {{"pair_count", distinct.size()},
               {"relations", pairs},
               {"n_max", ctx.cfg.n_max},
               {"first_non_character", bad}};
  return r;
}

Report verify_evenness(Context& ctx) {
  Report r;
  auto H = ctx.heads(ctx.cfg.n_max);
  auto rows = multiplicity_table(H, ctx.data);
  json first_bad = nullptr;
  for (const auto& row : rows) {
    if (row.n == 0 || row.even_pattern) continue;
    first_bad = row.n;
    r.fail("H_" + std::to_string(row.n) + " breaks the evenness pattern");
    break;
  }
  r.header = {"irrep", "printed_level", "level", "printed_depth", "depth", "depth_checked", "even_ok"};
  json table = json::array();
  for (const auto& e : evenness_suite(rows, ctx.data)) {
    if (!e.level_matches()) r.fail(e.printed.irrep + ": level " + std::to_string(e.computed_level));
    if (!e.even_ok) r.fail(e.printed.irrep + ": odd multiplicity at n = " + std::to_string(e.first_failure.value_or(-1)));
    table.push_back({{"irrep", e.printed.irrep},
                     {"printed_level", e.printed.level},
                     {"level", e.computed_level},
                     {"printed_depth", e.printed.depth},
                     {"depth", e.computed_depth},
                     {"depth_checked", e.depth_checked},
                     {"even_ok", e.even_ok}});
    r.rows.push_back({e.printed.irrep, std::to_string(e.printed.level), std::to_string(e.computed_level),
                      std::to_string(e.printed.depth), std::to_string(e.computed_depth),
                      std::to_string(e.depth_checked), str(e.even_ok)});
    r.text.push_back(e.printed.irrep + " level " + std::to_string(e.computed_level) + " depth " +
                     std::to_string(e.depth_checked) + (e.even_ok ? " even" : " NOT even"));
  }
  r.text.push_back("evenness pattern for 1 <= n <= " + std::to_string(ctx.cfg.n_max) + ": " +
                   (first_bad.is_null() ? "ok" : "FAILED"));
  r.results = {{"n_max", ctx.cfg.n_max}, {"first_pattern_failure", first_bad}, {"table", table}};
  return r;
}

json bound_json(const BoundReport& b) {
  json classes = json::array();
  for (const auto& c : b.classes)
    classes.push_back({{"class", c.label},
                       {"order", c.order},
                       {"centralizer", str(c.centralizer)},
                       {"table_constant", c.table_constant},
                       {"upper", c.upper},
                       {"ratio", std::isfinite(c.ratio) ? json(c.ratio) : json(nullptr)}});
  return {{"k", b.k},
          {"mode", b.mode == BoundMode::exact ? "exact" : "analytic"},
          {"identity_lower", b.identity_lower},
          {"classes", classes},
          {"certificate", b.certificate}};
}

double min_ratio(const BoundReport& b) {
  double m = INFINITY;
  for (const auto& c : b.classes) m = std::min(m, c.ratio);
  return m;
}

BoundMode parse_mode(const std::optional<std::string>& m, BoundMode fallback) {
  if (!m) return fallback;
  if (*m == "exact") return BoundMode::exact;
  if (*m == "analytic") return BoundMode::analytic;
  throw ConfigError("unknown mode " + *m);
}

Report verify_positivity(Context& ctx) {
  Report r;
  const auto& cfg = ctx.cfg;
  r.header = {"k", "mode", "certificate", "min_ratio"};
  json exact = json::array(), analytic = json::array();
  bool want_exact = !cfg.mode || *cfg.mode == "exact";
  bool want_analytic = !cfg.mode || *cfg.mode == "analytic";
  parse_mode(cfg.mode, BoundMode::exact);

  if (want_exact) {
    std::vector<std::int64_t> ks = k_range(cfg, 31, std::min<std::int64_t>(200, cfg.n_max));
    std::int64_t top = ks.empty() ? 0 : *std::max_element(ks.begin(), ks.end());
    if (top > cfg.n_max) throw ConfigError("exact mode needs --n-max >= k");
    auto H = ctx.heads(std::max(top, cfg.n_max));
    for (auto k : ks) {
      if (k < 0) throw ConfigError("k must be nonnegative");
      auto b = exact_bounds(k, ctx.data, H);
      if (!b.certificate) r.fail("exact certificate fails at k = " + std::to_string(k));
      exact.push_back({{"k", k}, {"certificate", b.certificate}, {"min_ratio", min_ratio(b)}});
      r.rows.push_back({std::to_string(k), "exact", str(b.certificate), fmt(min_ratio(b))});
    }
    json nonpositive = nullptr;
    for (const auto& row : multiplicity_table(H, ctx.data)) {
      if (row.n < 25) continue;
      bool pos = std::all_of(row.mult.begin(), row.mult.end(), [](const Rational& x) { return x > 0; });
      if (!pos) {
        nonpositive = row.n;
        r.fail("H_" + std::to_string(row.n) + " misses an irreducible");
        break;
      }
    }
    r.results["first_nonpositive_from_25"] = nonpositive;
    r.text.push_back("exact certificate on " + std::to_string(ks.size()) + " values of k; all multiplicities positive for 25 <= n <= " +
                     std::to_string(std::max(top, cfg.n_max)) + ": " + (nonpositive.is_null() ? "ok" : "FAILED"));
  }
  if (want_analytic) {
    std::int64_t k = cfg.k.value_or(390);
    if (k < 150) throw ConfigError("analytic bounds need k >= 150");
    auto b = character_bounds(k, ctx.data);
    if (!b.certificate) r.fail("analytic certificate fails at k = " + std::to_string(k));
    analytic.push_back(bound_json(b));
    r.rows.push_back({std::to_string(k), "analytic", str(b.certificate), fmt(min_ratio(b))});
    r.text.push_back("analytic certificate at k = " + std::to_string(k) + ": " + (b.certificate ? "holds" : "FAILS"));
  }
  r.results["exact"] = exact;
  r.results["analytic"] = analytic;
  return r;
}

Report kloosterman_compare(Context& ctx) {
  Report r;
  const auto& cfg = ctx.cfg;
  std::int64_t cmax = cfg.c_max.value_or(60);
  std::vector<std::string> labels;
  if (cfg.class_label)
    labels.push_back(ctx.resolve(*cfg.class_label).merged);
  else
    labels = ctx.data.merged_labels();
  auto ks = k_range(cfg, 1, 10);
  r.header = {"class", "n", "h", "k", "max_diff"};
  double worst = 0;
  json worst_at = nullptr, per = json::array();
  std::int64_t comparisons = 0;
  for (const auto& label : labels) {
    const ClassInfo& info = ctx.data.merged_info(label);
    for (auto k : ks) {
      double m = 0;
      for (std::int64_t c = 1; c <= cmax; ++c) {
        double d = std::abs(kloosterman_direct(k, info.order, info.h, c) - kloosterman_sparse(k, info.order, info.h, c));
        ++comparisons;
        if (d > m) m = d;
        if (d > worst) {
          worst = d;
          worst_at = {{"class", label}, {"k", k}, {"c", c}};
        }
      }
      per.push_back({{"class", label}, {"n", info.order}, {"h", info.h}, {"k", k}, {"max_diff", m}});
      r.rows.push_back({label, std::to_string(info.order), std::to_string(info.h), std::to_string(k), fmt(m)});
    }
  }
  constexpr double tol = 1e-8;
  if (!(worst < tol)) r.fail("|direct - sparse| = " + fmt(worst) + " at " + worst_at.dump());
  r.results = {{"c_max", cmax}, {"comparisons", comparisons}, {"tolerance", tol}, {"max_diff", worst},
               {"worst", worst_at}, {"per_class", per}};
  r.text.push_back(std::to_string(comparisons) + " comparisons, max |direct - sparse| = " + fmt(worst));
  return r;
}

Report rademacher(Context& ctx) {
  Report r;
  const auto& cfg = ctx.cfg;
  std::int64_t cmax = cfg.c_max.value_or(500);
  std::vector<std::string> labels = cfg.class_label ? std::vector<std::string>{ctx.resolve(*cfg.class_label).merged}
                                                    : std::vector<std::string>{"1A", "2A", "3A", "23AB"};
  auto ks = k_range(cfg, 1, 10);
  std::int64_t kmax = *std::max_element(ks.begin(), ks.end());
  if (*std::min_element(ks.begin(), ks.end()) < 1) throw ConfigError("rademacher needs k >= 1");
  auto H = head_characters(kmax, 24 * (kmax + 2), ctx.data, ctx.lib);
  r.header = {"class", "k", "exact", "partial", "deviation"};
  json list = json::array();
  for (const auto& label : labels) {
    const ClassInfo& info = ctx.data.merged_info(label);
    std::size_t cls = ctx.data.class_index(info.label);
    for (auto k : ks) {
      double exact = H.at(k, cls).get_d();
      double partial = rademacher_partial(k, info.order, info.h, cmax);
      double dev = std::abs(partial - exact);
      if (!(dev < 0.5)) r.fail(label + " k = " + std::to_string(k) + " deviates by " + fmt(dev));
      list.push_back({{"class", label}, {"k", k}, {"exact", str(H.at(k, cls))}, {"partial", partial}, {"deviation", dev}});
      r.rows.push_back({label, std::to_string(k), str(H.at(k, cls)), fmt(partial), fmt(dev)});
      r.text.push_back("H_" + std::to_string(k) + "(" + label + ") = " + str(H.at(k, cls)) + "  partial " + fmt(partial));
    }
  }
  r.results = {{"c_max", cmax}, {"values", list}};
  return r;
}

Report bounds(Context& ctx) {
  Report r;
  const auto& cfg = ctx.cfg;
  BoundMode mode = parse_mode(cfg.mode, BoundMode::analytic);
  std::int64_t k = cfg.k.value_or(390);
  BoundReport b;
  if (mode == BoundMode::analytic) {
    if (k < 150) throw ConfigError("analytic bounds need k >= 150");
    b = character_bounds(k, ctx.data);
  } else {
    if (k < 0) throw ConfigError("k must be nonnegative");
    b = exact_bounds(k, ctx.data, ctx.heads(std::max(k, std::int64_t{1})));
  }
  if (!b.certificate) r.fail("certificate fails at k = " + std::to_string(k));
  r.results = bound_json(b);
  json est = json::object();
  r.header = {"class", "order", "centralizer", "table_constant", "estimate", "upper", "ratio"};
  for (const auto& c : b.classes) {
    const ClassInfo& info = ctx.data.classes()[ctx.data.class_index(c.label)];
    double e = error_constant_estimate(info.order, info.h);
    est[c.label] = e;
    r.rows.push_back({c.label, std::to_string(c.order), str(c.centralizer), fmt(c.table_constant), fmt(e), fmt(c.upper),
                      fmt(c.ratio)});
    r.text.push_back(c.label + " ratio " + fmt(c.ratio));
  }
  r.results["constant_estimates"] = est;
  return r;
}

Report quadforms(Context& ctx) {
  Report r;
  std::int64_t K = ctx.cfg.k.value_or(200);
  if (K < 1) throw ConfigError("quadforms needs k >= 1");
  r.header = {"k", "D", "h", "hprime", "bound"};
  json list = json::array();
  for (std::int64_t k = 1; k <= K; ++k) {
    std::int64_t D = 1 - 8 * k;
    ClassNumbers c;
    try {
      c = class_numbers(D);
    } catch (const std::logic_error& e) {
      r.fail(e.what());
      continue;
    }
    json forms = json::array();
    for (const auto& f : reduced_forms(D)) forms.push_back({f.a, f.b, f.c});
    double bound = class_number_bound(D);
    list.push_back({{"k", k}, {"D", D}, {"h", c.h}, {"hprime", c.hprime}, {"bound", bound}, {"forms", forms}});
    r.rows.push_back({std::to_string(k), std::to_string(D), std::to_string(c.h), std::to_string(c.hprime), fmt(bound)});
  }
  r.results = {{"k_max", K}, {"divisor_constant_quarter", divisor_bound_const(0.25)}, {"discriminants", list}};
  r.text.push_back("h(1 - 8k) below the bound for 1 <= k <= " + std::to_string(K));
  return r;
}

Report conway_check(Context& ctx) {
  Report r;
  auto conway = ConwayData::load();
  r.header = {"identity", "lhs", "rhs", "amended_rhs", "balanced"};
  json ids = json::array();
  for (const auto& b : conway_dimension_check(conway, ctx.data)) {
    bool ok = b.balanced || (b.amended_rhs && *b.amended_rhs == b.lhs);
    if (!ok) r.fail("unbalanced: " + b.text + " (" + str(b.lhs) + " vs " + str(b.rhs) + ")");
    ids.push_back({{"text", b.text},
                   {"lhs", str(b.lhs)},
                   {"rhs", str(b.rhs)},
                   {"relation", b.relation},
                   {"amended_rhs", b.amended_rhs ? json(str(*b.amended_rhs)) : json(nullptr)},
                   {"balanced", ok}});
    r.rows.push_back({b.text, str(b.lhs), str(b.rhs), b.amended_rhs ? str(*b.amended_rhs) : "", str(ok)});
    r.text.push_back(b.text + " : " + str(b.lhs) + " vs " + str(b.rhs) + (ok ? "" : "  UNBALANCED"));
  }
  auto H = ctx.heads(ctx.cfg.n_max);
  json bad = nullptr;
  for (const auto& row : multiplicity_table(H, ctx.data)) {
    if (row.n == 0 || row.conway_ok) continue;
    bad = row.n;
    r.fail("restriction criterion fails for H_" + std::to_string(row.n));
    break;
  }
  r.text.push_back("restriction criterion for 1 <= n <= " + std::to_string(ctx.cfg.n_max) + ": " +
                   (bad.is_null() ? "ok" : "FAILED"));
  r.results = {{"identities", ids}, {"n_max", ctx.cfg.n_max}, {"first_restriction_failure", bad}};
  return r;
}

const std::map<std::string, std::function<Report(Context&)>>& table() {
  static const std::map<std::string, std::function<Report(Context&)>> t = {
      {"headchars", headchars},
      {"verify-integrality", verify_integrality},
      {"verify-evenness", verify_evenness},
      {"verify-positivity", verify_positivity},
      {"kloosterman-compare", kloosterman_compare},
      {"rademacher", rademacher},
      {"bounds", bounds},
      {"quadforms", quadforms},
      {"conway-check", conway_check},
  };
  return t;
}

json config_json(const RunConfig& c) {
  auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
  return {{"command", c.command}, {"n_max", c.n_max},   {"prec24", c.prec24},
          {"c_max", opt(c.c_max)}, {"k", opt(c.k)},     {"class", opt(c.class_label)},
          {"mode", opt(c.mode)},   {"format", c.format}};
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : table()) v.push_back(name);
    return v;
  }();
  return names;
}

Report run(const RunConfig& config) {
  auto it = table().find(config.command);
  if (it == table().end()) throw ConfigError("unknown command " + config.command);
  if (config.n_max < 0) throw ConfigError("--n-max must be nonnegative");
  if (config.c_max && *config.c_max < 1) throw ConfigError("--c-max must be positive");
  if (config.prec24 < 0) throw ConfigError("--prec24 must be nonnegative");
  try {
    parse_format(config.format);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  Context ctx(config);
  Report r = it->second(ctx);
  r.command = config.command;
  r.config = config_json(config);
  return r;
}

int exit_status(const Report& r) { return r.passed ? 0 : 1; }

}  // namespace mathieu
