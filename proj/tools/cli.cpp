#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "holoroot/detres.hpp"
#include "holoroot/multiindex.hpp"
#include "holoroot/oracle.hpp"
#include "holoroot/poly.hpp"
#include "holoroot/table_io.hpp"
#include "holoroot/taylor.hpp"
#include "holoroot/weyl.hpp"

namespace holoroot::cli {

namespace {

struct RunConfig {
  int k = 0;
  int order = 8;
  std::string sigma_text;
  std::vector<Rational> sigma;
  std::string out_path;
  std::string format;
  std::string target = "all";
  int max_m = 12;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void validate(const RunConfig& cfg) {
  if (cfg.k < 2) throw UsageError("--k must be at least 2");
  if (cfg.order < 0) throw UsageError("--order must be non-negative");
  if (cfg.max_m < 0) throw UsageError("--max-m must be non-negative");
}

std::vector<Rational> parse_sigma(const std::string& text, int k) {
  std::vector<Rational> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (static_cast<int>(values.size()) != k)
    throw UsageError("--sigma needs exactly k = " + std::to_string(k) + " values");
  return values;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Writes to --out when given, otherwise to `out`. Returns false on I/O error.
bool emit(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << payload;
    return true;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) return false;
  file << payload;
  file.close();
  return static_cast<bool>(file);
}

int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CoeffTable t = build_table(static_cast<std::size_t>(cfg.k), static_cast<std::uint32_t>(cfg.order));
  std::string payload;
  if (cfg.format == "csv")
    payload = to_csv(t);
  else if (cfg.format == "text")
    payload = to_text(t);
  else
    payload = to_json(t);
  if (!emit(cfg, payload, out)) {
    err << "error: cannot write " << cfg.out_path << '\n';
    return io_error;
  }
  std::ostream& summary = cfg.out_path.empty() ? err : out;
  summary << "k=" << cfg.k << " Q=" << cfg.order << " entries=" << t.size() << '\n';
  return ok;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto k = static_cast<std::size_t>(cfg.k);
  const CoeffTable t = build_table(k, static_cast<std::uint32_t>(cfg.order));
  const Rational series_value = evaluate(root_series(t), std::span<const Rational>(cfg.sigma));
  const double series = series_value.get_d();
  ShiftedPolynomial<std::complex<double>> p{k, {}};
  for (const auto& s : cfg.sigma) p.sigma.emplace_back(s.get_d());
  std::complex<double> root;
  try {
    root = newton_root(p);
  } catch (const NewtonError& e) {
    err << "warning: " << e.what() << "; sigma is outside the basin of the root near -1\n";
    return newton_failed;
  }
  const double difference = std::abs(std::complex<double>(series) - root);

  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["k"] = cfg.k;
    doc["Q"] = cfg.order;
    doc["sigma"] = nlohmann::ordered_json::array();
    for (const auto& s : cfg.sigma) doc["sigma"].push_back(s.get_str());
    doc["series"] = series;
    doc["newton"] = root.real();
    doc["newton_imag"] = root.imag();
    doc["difference"] = difference;
    os << doc.dump() << '\n';
  } else if (cfg.format == "csv") {
    os << "series,newton,newton_imag,difference\n"
       << format_double(series) << ',' << format_double(root.real()) << ','
       << format_double(root.imag()) << ',' << format_double(difference) << '\n';
  } else {
    os << "series = " << format_double(series) << '\n'
       << "newton = " << format_double(root.real());
    if (root.imag() != 0) os << (root.imag() < 0 ? " - " : " + ") << format_double(std::abs(root.imag())) << "i";
    os << '\n' << "difference = " << format_double(difference) << '\n';
  }
  if (!emit(cfg, os.str(), out)) {
    err << "error: cannot write " << cfg.out_path << '\n';
    return io_error;
  }
  return ok;
}

// Collects PASS / FAIL / DISCREPANCY lines.
class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(bool passed, const std::string& name, const std::string& detail = "") {
    (passed ? passed_ : failed_)++;
    out_ << (passed ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out_ << "  [" << detail << ']';
    out_ << '\n';
  }
  void note(const std::string& line) { out_ << line << '\n'; }
  bool all_passed() const { return failed_ == 0; }
  void summary() { out_ << "summary: " << passed_ << " passed, " << failed_ << " failed\n"; }

 private:
  std::ostream& out_;
  int passed_ = 0;
  int failed_ = 0;
};

void verify_identities(const RunConfig& cfg, Report& report) {
  const auto k = static_cast<std::size_t>(cfg.k);
  const auto M = static_cast<std::uint32_t>(cfg.max_m);
  const std::string depth = "kills N_0..N_" + std::to_string(M);
  for (int h = 2; h <= cfg.k; ++h) {
    auto r = identity_residual(Identity::Eh, k, h);
    report.check(r.op.is_zero(), r.name, "zero operator");
  }
  {
    auto r = identity_residual(Identity::E1, k);
    report.check(r.op.is_zero(), r.name, "zero operator");
  }
  for (int h = 2; h <= cfg.k; ++h) {
    auto r = identity_residual(Identity::Fh, k, h);
    report.check(annihilates_newton(r.op, M), r.name, depth);
  }
  {
    auto r = identity_residual(Identity::F1, k);
    report.check(annihilates_newton(r.op, M), r.name, depth);
  }
  for (auto [p, q] : {std::pair{0, -1}, std::pair{0, 1}, std::pair{1, -1}}) {
    auto r = identity_residual(Identity::commutator, k, p, q);
    report.check(annihilates_newton(r.op, M), r.name,
                 depth + (r.op.is_zero() ? ", zero operator" : ""));
  }
}

void verify_recurrences(const RunConfig& cfg, Report& report) {
  const auto k = static_cast<std::size_t>(cfg.k);
  const auto Q = static_cast<std::uint32_t>(cfg.order);
  const CoeffTable t = build_table(k, Q);
  const auto violations = check_recurrences(t);
  std::size_t a = 0;
  std::size_t b = 0;
  for (const auto& v : violations) (v.relation == 'A' ? a : b)++;
  report.check(a == 0, "recurrence A", std::to_string(a) + " violations");
  report.check(b == 0, "recurrence B", std::to_string(b) + " violations");

  bool zeros = true;
  for (const auto& [key, value] : t.values())
    if (key.q >= 1 && (key.r - 1) % k == 0 && value != 0) zeros = false;
  report.check(zeros, "zero columns r = 1 mod k");

  if (k == 2) report.check(t == radical_table_k2(Q), "k=2 table equals radical expansion");

  for (const auto& d : diagonal_diagnostics(k)) {
    const std::string key = "C[" + std::to_string(d.h) + "," + std::to_string(d.h) + "]";
    report.check(d.recurrence == d.inverted, key + " chain equals inverted off-diagonal formula",
                 d.recurrence.get_str());
    const double numeric = numeric_diagonal_coefficient(k, d.h);
    const double tolerance = 1e-8 * std::max(1.0, std::abs(numeric));
    report.check(std::abs(numeric - d.recurrence.get_d()) <= tolerance,
                 key + " recurrence value matches contour-integral oracle",
                 "oracle " + format_double(numeric));
    if (d.discrepancy)
      report.note("DISCREPANCY " + key + " recurrence=" + d.recurrence.get_str() +
                  " displayed=" + d.displayed.get_str() +
                  " (displayed closed form disagrees; recurrence value is used)");
  }
}

void verify_annihilation(const RunConfig& cfg, Report& report) {
  const CoeffTable t =
      build_table(static_cast<std::size_t>(cfg.k), static_cast<std::uint32_t>(cfg.order));
  for (const auto& r : annihilation_residuals(t)) {
    std::string detail = r.window ? "exact through degree " + std::to_string(*r.window)
                                  : std::string("empty window");
    if (r.lowest_nonzero) detail += ", first nonzero degree " + std::to_string(*r.lowest_nonzero);
    report.check(r.ok, r.name + " annihilates the series", detail);
  }
}

void verify_determinant(const RunConfig& cfg, Report& report) {
  const auto k = static_cast<std::size_t>(cfg.k);
  try {
    const auto c = lemma_determinant_check(k);
    report.check(true, "determinant lemma det = eps * s_k * Delta",
                 "eps = " + std::to_string(c.sign));
  } catch (const std::logic_error& e) {
    report.check(false, "determinant lemma det = eps * s_k * Delta", e.what());
  }
  try {
    const auto c = lemma_manquant_check(k);
    report.check(true, "eliminant det = eps * (-k)^(k-1) * Delta",
                 "eps = " + std::to_string(c.sign));
  } catch (const std::logic_error& e) {
    report.check(false, "eliminant det = eps * (-k)^(k-1) * Delta", e.what());
  }
  if (k == 2) {
    Poly expected = Poly::variable(2, 1) * Poly::variable(2, 1) - Poly::variable(2, 2) * Rational(4);
    report.check(discriminant(2) == expected, "Delta = s1^2 - 4 s2");
  }
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  return make_rational(num(rng), den(rng));
}

void verify_surface(const RunConfig& cfg, Report& report) {
  const auto k = static_cast<std::size_t>(cfg.k);
  std::mt19937_64 rng(20240607);
  bool minors_ok = true;
  bool symbols_ok = true;
  std::vector<Poly> symbols;
  for (std::size_t p = 1; p < k; ++p)
    for (std::size_t q = 2; q <= k; ++q) {
      const DiffOp a = gen_A(k, p, q);
      if (!a.is_zero()) symbols.push_back(symbol(a));
    }
  for (int i = 0; i < 50; ++i) {
    const Rational z0 = random_rational(rng);
    const Rational z1 = random_rational(rng);
    for (Chart chart : {Chart::first, Chart::last}) {
      const auto point = sk_point<Rational>(k, z0, z1, chart);
      for (const auto& m : sk_minors(point))
        if (m != 0) minors_ok = false;
      std::vector<Rational> coords(2 * k, Rational(0));
      for (std::size_t h = 0; h < k; ++h) {
        coords[h] = random_rational(rng);
        coords[k + h] = point.eta[h];
      }
      for (const auto& s : symbols)
        if (evaluate(s, std::span<const Rational>(coords)) != 0) symbols_ok = false;
    }
  }
  report.check(minors_ok, "minors vanish on both chart parametrizations", "100 points");
  report.check(symbols_ok, "symbols of A_{p,q} vanish on the cone", "100 points");

  bool normal_forms = true;
  for (std::uint32_t q = 0; q <= 8; ++q)
    for (std::uint32_t r = q; r <= k * q; ++r) {
      const auto mu = minimal_form(k, {q, r});
      if (!mu || !is_minimal(*mu)) normal_forms = false;
      for (const auto& alpha : enumerate_class(k, {q, r}))
        if (reduce_to_minimal(alpha) != *mu) normal_forms = false;
    }
  report.check(normal_forms, "every class reduces to its unique minimal monomial", "length <= 8");
}

void verify_newton(const RunConfig& cfg, Report& report) {
  const auto k = static_cast<std::size_t>(cfg.k);
  const int M = cfg.max_m;
  bool derivative_law = true;
  bool dn_recurrence = true;
  bool action = true;
  for (int m = 0; m <= M; ++m) {
    const Poly N = newton_polynomial(k, static_cast<std::uint32_t>(m));
    for (std::size_t h = 1; h <= k; ++h) {
      Poly expected(k);
      if (m > 0) {
        expected = dn_polynomial(k, m - static_cast<int>(h)) *
                   Rational(h % 2 == 1 ? m : -m);
      }
      if (partial_derivative(N, h) != expected) derivative_law = false;
    }
    if (m >= 1) {
      Poly sum(k);
      for (std::size_t h = 0; h <= k; ++h)
        sum += sigma(k, h) * dn_polynomial(k, m - static_cast<int>(h)) *
               Rational(h % 2 == 0 ? 1 : -1);
      if (!sum.is_zero()) dn_recurrence = false;
    }
    for (int p : {-1, 0, 1}) {
      const DiffOp U = p == -1 ? gen_Um1(k) : p == 0 ? gen_U0(k, 0) : gen_U1(k);
      Poly expected(k);
      if (m + p >= 0) expected = newton_polynomial(k, static_cast<std::uint32_t>(m + p)) * Rational(m);
      if (apply(U, N) != expected) action = false;
    }
  }
  const std::string range = "m <= " + std::to_string(M);
  report.check(derivative_law, "d_h N_m = (-1)^(h-1) m DN_(m-h)", range);
  report.check(dn_recurrence, "sum (-1)^h s_h DN_(m-h) = 0", range);
  report.check(action, "U_p N_m = m N_(m+p) for p in {-1,0,1}", range);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  static const std::vector<std::pair<std::string, std::function<void(const RunConfig&, Report&)>>>
      suites = {
          {"identities", verify_identities}, {"recurrences", verify_recurrences},
          {"annihilation", verify_annihilation}, {"determinant", verify_determinant},
          {"surface", verify_surface},       {"newton", verify_newton},
      };
  Report report(out);
  out << "verify " << cfg.target << " k=" << cfg.k << " Q=" << cfg.order << " max-m=" << cfg.max_m
      << '\n';
  for (const auto& [name, suite] : suites) {
    if (cfg.target != "all" && cfg.target != name) continue;
    out << "# " << name << '\n';
    suite(cfg, report);
  }
  report.summary();
  return report.all_passed() ? ok : check_failed;
}

int cmd_newton_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto k = static_cast<std::size_t>(cfg.k);
  const int lowest = 1 - cfg.k;
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["k"] = cfg.k;
    doc["max_m"] = cfg.max_m;
    doc["N"] = nlohmann::ordered_json::array();
    for (int m = 0; m <= cfg.max_m; ++m)
      doc["N"].push_back({{"m", m}, {"poly", to_string(newton_polynomial(k, static_cast<std::uint32_t>(m)))}});
    doc["DN"] = nlohmann::ordered_json::array();
    for (int m = lowest; m <= cfg.max_m; ++m)
      doc["DN"].push_back({{"m", m}, {"poly", to_string(dn_polynomial(k, m))}});
    os << doc.dump() << '\n';
  } else if (cfg.format == "csv") {
    os << "family,m,poly\n";
    for (int m = 0; m <= cfg.max_m; ++m)
      os << "N," << m << ",\"" << to_string(newton_polynomial(k, static_cast<std::uint32_t>(m))) << "\"\n";
    for (int m = lowest; m <= cfg.max_m; ++m)
      os << "DN," << m << ",\"" << to_string(dn_polynomial(k, m)) << "\"\n";
  } else {
    for (int m = 0; m <= cfg.max_m; ++m)
      os << "N_" << m << " = " << to_string(newton_polynomial(k, static_cast<std::uint32_t>(m))) << '\n';
    for (int m = lowest; m <= cfg.max_m; ++m)
      os << "DN_" << m << " = " << to_string(dn_polynomial(k, m)) << '\n';
  }
  if (!emit(cfg, os.str(), out)) {
    err << "error: cannot write " << cfg.out_path << '\n';
    return io_error;
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Taylor expansion of the root near -1 of the universal polynomial"};
  app.name("holoroot");
  app.require_subcommand(1);

  RunConfig cfg;
  const std::vector<std::string> formats{"json", "csv", "text"};
  const std::vector<std::string> targets{"identities", "recurrences", "annihilation", "determinant",
                                         "surface",    "newton",      "all"};

  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--k", cfg.k, "degree of the universal polynomial (>= 2)")->required();
    sub->add_option("--order", cfg.order, "truncation order Q")->capture_default_str();
    if (with_format) {
      sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
      sub->add_option("--out", cfg.out_path, "write the artifact to this file");
    }
  };

  auto* expand = app.add_subcommand("expand", "build and export the coefficient table");
  add_common(expand, true);

  auto* eval = app.add_subcommand("eval", "compare the truncated series with Newton's root");
  add_common(eval, true);
  eval->add_option("--sigma", cfg.sigma_text, "perturbation s1,...,sk (p/q or decimals)")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, false);
  std::string positional_target;
  verify->add_option("suite", positional_target, "suite to run (same as --target)")->check(CLI::IsMember(targets));
  verify->add_option("--target", cfg.target, "suite to run")->check(CLI::IsMember(targets));
  verify->add_option("--max-m", cfg.max_m, "Newton-basis depth")->capture_default_str();

  auto* newton = app.add_subcommand("newton-table", "print N_m and DN_m");
  newton->add_option("--k", cfg.k, "degree of the universal polynomial (>= 2)")->required();
  newton->add_option("--max-m", cfg.max_m, "largest m")->capture_default_str();
  newton->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  newton->add_option("--out", cfg.out_path, "write the output to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage_error;
  }

  try {
    validate(cfg);
    if (!positional_target.empty()) cfg.target = positional_target;
    if (*expand) {
      if (cfg.format.empty()) cfg.format = "json";
      return cmd_expand(cfg, out, err);
    }
    if (*eval) {
      if (cfg.format.empty()) cfg.format = "text";
      cfg.sigma = parse_sigma(cfg.sigma_text, cfg.k);
      return cmd_eval(cfg, out, err);
    }
    if (*verify) return cmd_verify(cfg, out);
    if (cfg.format.empty()) cfg.format = "text";
    return cmd_newton_table(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

}  // namespace holoroot::cli
