// hopf: reports on proper r-harmonic and biharmonic Hopf hypersurfaces.
//
//   hopf solve --type A2 --n 3 --k 1 --r 2
//   hopf scan --type E --r-range 27..120 --format csv
//   hopf verify --suite exact
//   hopf biharmonic --scan-threshold --p 1 --n-max 500

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hopf/biharmonic_stability.hpp"
#include "hopf/errors.hpp"
#include "hopf/existence_theorems.hpp"
#include "hopf/polyharmonic_residual.hpp"
#include "hopf/quartic_certificates.hpp"
#include "hopf/verification.hpp"
#include "hopf/version.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> p;
  std::optional<int> r;
  std::string r_range;
  int precision = 30;
  std::string tol = "1e-10";
  std::string format = "json";
  std::string out;
  std::string suite = "all";
  bool scan_threshold = false;
  std::optional<int> n_max;
  std::optional<int> r_max;
};

struct Report {
  json config = json::object();
  std::vector<std::string> columns;
  std::vector<json> rows;
  std::vector<hopf::Check> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

json real(const hopf::Real& x) { return hopf::format_real(x); }
json rational(const hopf::Rational& q) { return hopf::format_rational(q); }
template <class T>
json maybe(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

hopf::HypersurfaceFamily family_from(const Options& opt) {
  if (opt.type.empty()) throw UsageError("--type is required");
  const auto type = hopf::parse_family_type(opt.type);
  if (!type) throw UsageError("unknown family type '" + opt.type + "'");
  std::optional<int> n = opt.n;
  if (!n && *type == hopf::FamilyType::cp_d) n = 9;
  if (!n && *type == hopf::FamilyType::cp_e) n = 15;
  if (!n) throw UsageError("--n is required for " + std::string(hopf::to_string(*type)));
  return hopf::HypersurfaceFamily::make(*type, *n, opt.k);
}

std::pair<int, int> orders_from(const Options& opt) {
  if (opt.r && !opt.r_range.empty()) throw UsageError("--r and --r-range are exclusive");
  if (opt.r) return {*opt.r, *opt.r};
  if (opt.r_range.empty()) throw UsageError("--r or --r-range is required");
  const auto sep = opt.r_range.find("..");
  if (sep == std::string::npos) throw UsageError("--r-range expects LO..HI");
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const auto lo_text = opt.r_range.substr(0, sep);
    const auto hi_text = opt.r_range.substr(sep + 2);
    const int lo = std::stoi(lo_text, &used_lo);
    const int hi = std::stoi(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument("trailing");
    if (lo > hi) throw UsageError("--r-range has LO > HI");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--r-range expects integers LO..HI, got '" + opt.r_range + "'");
  }
}

hopf::Rational isolation_width(int precision) {
  hopf::Integer scale = 1;
  for (int i = 0; i < precision; ++i) scale *= 10;
  return hopf::Rational(1) / hopf::Rational(scale);
}

void describe_family(json& config, const hopf::HypersurfaceFamily& family) {
  config["type"] = std::string(hopf::to_string(family.type()));
  config["n"] = family.n();
  config["k"] = maybe(family.k());
}

hopf::Check make_check(std::string name, std::string tag, bool passed, std::string detail = {}) {
  return {std::move(name), std::move(tag), passed, std::move(detail)};
}

Report cmd_solve(const Options& opt, const hopf::Real& tol) {
  const auto family = family_from(opt);
  if (!opt.r || !opt.r_range.empty()) throw UsageError("solve needs a single --r");
  const int r = *opt.r;
  Report rep;
  describe_family(rep.config, family);
  rep.config["r"] = r;
  rep.columns = {"x", "x_exact", "lo", "hi", "t", "residual", "trace", "trace_sq"};

  const auto poly = hopf::build_quartic(family, r);
  const auto [lo, hi] = hopf::solution_x_range(family);
  const auto minimal = hopf::minimal_x(family);
  const auto certs = hopf::isolate_and_refine(poly, lo, hi, isolation_width(opt.precision));
  bool all_small = true;
  for (const auto& cert : certs) {
    if (cert.lo <= minimal && minimal <= cert.hi && poly(minimal) == 0) continue;
    const hopf::Real t = hopf::root_to_radius(family, cert.refined_root);
    const auto res = hopf::residual(family, t, r, tol);
    all_small = all_small && abs(res.residual) <= tol;
    json row;
    row["x"] = real(cert.refined_root);
    row["x_exact"] = cert.exact_root ? rational(*cert.exact_root) : json(nullptr);
    row["lo"] = rational(cert.lo);
    row["hi"] = rational(cert.hi);
    row["t"] = real(t);
    row["residual"] = real(res.residual);
    row["trace"] = real(res.trace);
    row["trace_sq"] = real(res.trace_sq);
    rep.rows.push_back(std::move(row));
  }
  rep.checks.push_back(make_check("residual vanishes at every certified radius", "r-harmonic equation",
                                  all_small, std::to_string(rep.rows.size()) + " radii"));
  return rep;
}

std::optional<hopf::ThresholdPair> thresholds_or_none(const hopf::HypersurfaceFamily& family,
                                                      json& config) {
  try {
    const auto pair = hopf::guaranteed_thresholds(family);
    config["r_two"] = pair.r_two;
    config["r_four"] = maybe(pair.r_four);
    return pair;
  } catch (const hopf::HopfError& e) {
    if (e.kind() != hopf::ErrorKind::no_exact_count_guarantee &&
        e.kind() != hopf::ErrorKind::not_applicable) {
      throw;
    }
    config["r_two"] = nullptr;
    config["r_four"] = nullptr;
    config["threshold_note"] = std::string(hopf::to_string(e.kind()));
    return std::nullopt;
  }
}

Report scan_ch(const hopf::HypersurfaceFamily& family, int r_lo, int r_hi) {
  Report rep;
  describe_family(rep.config, family);
  rep.config["r_lo"] = r_lo;
  rep.config["r_hi"] = r_hi;
  constexpr std::size_t kGrid = 10000;
  rep.config["grid_points"] = kGrid;
  rep.columns = {"r", "max_residual", "argmax_t", "tail_limit", "negative"};
  const auto grid = hopf::radius_grid(family, hopf::Real("1e-3"), hopf::Real(10), kGrid);
  bool all_negative = true;
  for (const auto& scan : hopf::chn_scan_orders(family, r_lo, r_hi, grid)) {
    all_negative = all_negative && scan.passed();
    json row;
    row["r"] = scan.r;
    row["max_residual"] = real(scan.max_residual);
    row["argmax_t"] = real(scan.argmax_t);
    row["tail_limit"] = real(scan.tail_limit);
    row["negative"] = scan.passed();
    rep.rows.push_back(std::move(row));
  }
  rep.checks.push_back(make_check("residual strictly negative on the grid", "CH non-existence", all_negative));
  return rep;
}

Report cmd_scan(const Options& opt) {
  const auto family = family_from(opt);
  const auto [r_lo, r_hi] = orders_from(opt);
  if (!family.is_projective()) return scan_ch(family, r_lo, r_hi);
  Report rep;
  describe_family(rep.config, family);
  rep.config["r_lo"] = r_lo;
  rep.config["r_hi"] = r_hi;
  const auto pair = thresholds_or_none(family, rep.config);
  rep.columns = {"r", "count", "probe_pattern", "expected_pattern", "ge_r_two", "ge_r_four"};

  int two_rows = 0;
  int four_rows = 0;
  bool two_ok = true;
  bool four_ok = true;
  bool probes_ok = true;
  for (int r = r_lo; r <= r_hi; ++r) {
    const int count = hopf::count_solutions(family, r);
    json row;
    row["r"] = r;
    row["count"] = count;
    std::optional<hopf::ProbeReport> probes;
    try {
      probes = hopf::probe_values(family, r);
    } catch (const hopf::HopfError& e) {
      if (e.kind() != hopf::ErrorKind::probes_collide) throw;
    }
    row["probe_pattern"] = probes ? json(probes->pattern()) : json(nullptr);
    row["expected_pattern"] = probes ? json(probes->expected_pattern) : json(nullptr);
    const bool ge_two = pair && r >= pair->r_two;
    const bool ge_four = pair && pair->r_four && r >= *pair->r_four;
    row["ge_r_two"] = ge_two;
    row["ge_r_four"] = ge_four;
    if (ge_two) {
      ++two_rows;
      two_ok = two_ok && count >= 2;
    }
    if (ge_four) {
      ++four_rows;
      four_ok = four_ok && count == 4;
      probes_ok = probes_ok && probes && probes->matches_expected();
    }
    rep.rows.push_back(std::move(row));
  }
  if (two_rows > 0) {
    rep.checks.push_back(make_check("at least two solutions for r >= r_two", "two-solution thresholds", two_ok,
                                    std::to_string(two_rows) + " orders"));
  }
  if (four_rows > 0) {
    const auto detail = std::to_string(four_rows) + " orders";
    rep.checks.push_back(make_check("exactly four solutions for r >= r_four", "exact-count thresholds", four_ok, detail));
    rep.checks.push_back(make_check("probe signs for r >= r_four", "CP existence arguments", probes_ok, detail));
  }
  return rep;
}

Report cmd_probes(const Options& opt) {
  const auto family = family_from(opt);
  if (!opt.r || !opt.r_range.empty()) throw UsageError("probes needs a single --r");
  const int r = *opt.r;
  Report rep;
  describe_family(rep.config, family);
  rep.config["r"] = r;
  const auto pair = thresholds_or_none(family, rep.config);
  const auto probes = hopf::probe_values(family, r);
  rep.config["pattern"] = probes.pattern();
  rep.config["expected_pattern"] = probes.expected_pattern;
  rep.columns = {"label", "x", "x_decimal", "value", "sign"};
  for (const auto& point : probes.points) {
    json row;
    row["label"] = point.label;
    row["x"] = rational(point.x);
    row["x_decimal"] = real(hopf::to_real(point.x));
    row["value"] = rational(point.value);
    row["sign"] = point.sign;
    rep.rows.push_back(std::move(row));
  }
  if (pair && pair->r_four && r >= *pair->r_four) {
    rep.checks.push_back(make_check("probe signs match", "CP existence arguments", probes.matches_expected(),
                                    probes.pattern() + " vs " + probes.expected_pattern));
  }
  return rep;
}

Report cmd_verify(const Options& opt, const hopf::Real& tol) {
  hopf::VerifyOptions vo;
  vo.residual_tol = tol;
  vo.isolation_tol = isolation_width(opt.precision);
  if (opt.n_max) {
    vo.n_max_exact = *opt.n_max;
    vo.n_max_cross = *opt.n_max;
    vo.n_max_ch = *opt.n_max;
    vo.n_max_biharmonic = *opt.n_max;
  }
  if (opt.r_max) {
    vo.r_max_cross = *opt.r_max;
    vo.r_max_ch = *opt.r_max;
  }
  Report rep;
  rep.config["suite"] = opt.suite;
  rep.config["n_max_exact"] = vo.n_max_exact;
  rep.config["n_max_cross"] = vo.n_max_cross;
  rep.config["r_max_cross"] = vo.r_max_cross;
  rep.config["n_max_ch"] = vo.n_max_ch;
  rep.config["r_max_ch"] = vo.r_max_ch;
  rep.config["n_max_biharmonic"] = vo.n_max_biharmonic;
  rep.config["seed"] = vo.seed;
  rep.checks = hopf::run_suite(opt.suite, vo);
  return rep;
}

json stability_row(const hopf::StabilityReport& s) {
  json row;
  row["n"] = s.n;
  row["p"] = s.p;
  row["branch"] = std::string(hopf::to_string(s.branch));
  row["status"] = "tube";
  row["cos_sq_t"] = real(s.cos_sq_t);
  row["t"] = real(s.t);
  row["trace"] = real(s.trace);
  row["trace_sq"] = real(s.trace_sq);
  row["lambda_min_sq"] = real(s.lambda_min_sq);
  row["lhs"] = real(s.lhs);
  row["rhs"] = real(s.rhs);
  row["condition_holds"] = s.condition_holds;
  row["unstable"] = s.constant_witness > 0;
  row["index_claim"] = std::string(hopf::to_string(s.index_claim));
  return row;
}

Report cmd_biharmonic(const Options& opt) {
  Report rep;
  if (opt.scan_threshold) {
    const int n_max = opt.n_max.value_or(500);
    rep.config["scan_threshold"] = true;
    rep.config["n_max"] = n_max;
    rep.config["p"] = maybe(opt.p);
    rep.columns = {"p", "n_max", "first_hold", "threshold", "empirical_c", "monotone"};
    std::vector<int> orders;
    if (opt.p) {
      orders.push_back(*opt.p);
    } else {
      orders = {1, 2, 3};
    }
    bool all_found = true;
    for (int p : orders) {
      if (p < 1) throw UsageError("--p must be >= 1");
      const auto scan = hopf::index_threshold_scan(p, n_max);
      all_found = all_found && scan.threshold.has_value();
      json row;
      row["p"] = p;
      row["n_max"] = n_max;
      row["first_hold"] = maybe(scan.first_hold);
      row["threshold"] = maybe(scan.threshold);
      row["empirical_c"] = maybe(scan.empirical_c());
      row["monotone"] = scan.monotone();
      rep.rows.push_back(std::move(row));
    }
    rep.checks.push_back(make_check("finite empirical threshold", "index-one condition", all_found));
    return rep;
  }
  if (!opt.n) throw UsageError("biharmonic needs --n (or --scan-threshold)");
  const int n = *opt.n;
  if (n < 2) throw UsageError("--n must be >= 2");
  rep.config["n"] = n;
  rep.config["p"] = maybe(opt.p);
  rep.columns = {"n",   "p",        "branch", "status",          "cos_sq_t", "t",          "trace",
                 "trace_sq", "lambda_min_sq", "lhs", "rhs", "condition_holds", "unstable", "index_claim"};
  std::vector<int> orders;
  if (opt.p) {
    if (*opt.p < 1 || *opt.p > n - 1) throw UsageError("--p must lie in 1..n-1");
    orders.push_back(*opt.p);
  } else {
    for (int p = 1; p <= n - 1; ++p) orders.push_back(p);
  }
  bool all_unstable = true;
  for (int p : orders) {
    const auto radii = hopf::biharmonic_radii(n, p);
    for (auto branch : {hopf::Branch::plus, hopf::Branch::minus}) {
      bool is_tube = false;
      for (const auto& tube : radii.tubes) is_tube = is_tube || tube.branch == branch;
      if (is_tube) {
        const auto report = hopf::stability_condition(n, p, branch);
        all_unstable = all_unstable && report.constant_witness > 0;
        rep.rows.push_back(stability_row(report));
        continue;
      }
      for (const auto& d : radii.degenerate) {
        if (d.branch != branch) continue;
        json row;
        for (const auto& c : rep.columns) row[c] = nullptr;
        row["n"] = n;
        row["p"] = p;
        row["branch"] = std::string(hopf::to_string(branch));
        row["status"] = std::string(hopf::to_string(hopf::ErrorKind::degenerate_tube));
        row["cos_sq_t"] = real(d.cos_sq_t);
        rep.rows.push_back(std::move(row));
      }
    }
  }
  rep.checks.push_back(make_check("every biharmonic tube is unstable", "instability", all_unstable));
  return rep;
}

std::string csv_field(const json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return value.dump();
}

std::string text_field(const json& value) {
  if (value.is_null()) return "-";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string render(const Report& rep, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    json doc;
    doc["config"] = rep.config;
    doc["rows"] = rep.rows;
    doc["checks"] = json::array();
    for (const auto& c : rep.checks) {
      doc["checks"].push_back({{"name", c.name}, {"tag", c.tag}, {"passed", c.passed}, {"detail", c.detail}});
    }
    doc["version"] = hopf::kVersion;
    os << doc.dump(2) << '\n';
    return os.str();
  }
  if (format == "csv") {
    // Reports without rows (verify) list their checks instead.
    if (rep.rows.empty() && !rep.checks.empty()) {
      os << "name,tag,passed,detail\n";
      for (const auto& c : rep.checks) {
        os << csv_field(c.name) << ',' << csv_field(c.tag) << ',' << (c.passed ? "true" : "false") << ','
           << csv_field(c.detail) << '\n';
      }
      return os.str();
    }
    for (std::size_t i = 0; i < rep.columns.size(); ++i) os << (i ? "," : "") << rep.columns[i];
    os << '\n';
    for (const auto& row : rep.rows) {
      for (std::size_t i = 0; i < rep.columns.size(); ++i) {
        os << (i ? "," : "") << csv_field(row.value(rep.columns[i], json(nullptr)));
      }
      os << '\n';
    }
    return os.str();
  }
  for (const auto& [key, value] : rep.config.items()) os << key << ": " << text_field(value) << '\n';
  if (!rep.columns.empty()) {
    std::vector<std::size_t> width(rep.columns.size());
    for (std::size_t i = 0; i < rep.columns.size(); ++i) width[i] = rep.columns[i].size();
    for (const auto& row : rep.rows) {
      for (std::size_t i = 0; i < rep.columns.size(); ++i) {
        width[i] = std::max(width[i], text_field(row.value(rep.columns[i], json(nullptr))).size());
      }
    }
    os << '\n';
    auto line = [&](auto cell) {
      for (std::size_t i = 0; i < rep.columns.size(); ++i) {
        const std::string s = cell(i);
        os << (i ? "  " : "") << s << std::string(width[i] - s.size(), ' ');
      }
      os << '\n';
    };
    line([&](std::size_t i) { return rep.columns[i]; });
    for (const auto& row : rep.rows) {
      line([&](std::size_t i) { return text_field(row.value(rep.columns[i], json(nullptr))); });
    }
  }
  if (!rep.checks.empty()) os << '\n';
  for (const auto& c : rep.checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.tag << ")";
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper r-harmonic and biharmonic Hopf hypersurfaces in complex space forms"};
  app.set_version_flag("--version", std::string(hopf::kVersion));
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("HOPF_PRECISION")) {
    try {
      opt.precision = std::stoi(env);
    } catch (const std::logic_error&) {
      std::cerr << "error: HOPF_PRECISION must be an integer\n";
      return kExitUsage;
    }
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--precision", opt.precision, "decimal digits of the isolating intervals (30-50)");
    sub->add_option("--tol", opt.tol, "residual tolerance, in (0, 1e-6]");
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", opt.out, "write the report to PATH");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--type", opt.type, "family tag: A1, A2, B, C, D, E or CH_*");
    sub->add_option("--n", opt.n, "complex dimension");
    sub->add_option("--k", opt.k, "A2 parameter, 1 <= k <= n-2");
  };

  auto* solve = app.add_subcommand("solve", "proper r-harmonic radii of one family");
  add_family(solve);
  solve->add_option("--r", opt.r, "order r >= 2");
  solve->add_option("--r-range", opt.r_range, "LO..HI (not accepted by solve)");
  add_common(solve);

  auto* scan = app.add_subcommand("scan", "solution counts over a range of orders");
  add_family(scan);
  scan->add_option("--r", opt.r, "single order");
  scan->add_option("--r-range", opt.r_range, "inclusive range LO..HI");
  add_common(scan);

  auto* probes = app.add_subcommand("probes", "exact probe values of the quartic");
  add_family(probes);
  probes->add_option("--r", opt.r, "order r >= 2");
  probes->add_option("--r-range", opt.r_range, "LO..HI (not accepted by probes)");
  add_common(probes);

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--suite", opt.suite, "exact, cross, ch-nonexistence, trig, biharmonic, counts or all");
  verify->add_option("--n-max", opt.n_max, "largest n for every suite");
  verify->add_option("--r-max", opt.r_max, "largest r for the cross and CH suites");
  add_common(verify);

  auto* bih = app.add_subcommand("biharmonic", "biharmonic tubes and their stability");
  bih->add_option("--n", opt.n, "complex dimension");
  bih->add_option("--p", opt.p, "focal codimension parameter, 1 <= p <= n-1");
  bih->add_flag("--scan-threshold", opt.scan_threshold, "scan n for the index-one threshold");
  bih->add_option("--n-max", opt.n_max, "largest n for --scan-threshold");
  add_common(bih);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (opt.precision < 30 || opt.precision > hopf::kRealDigits) {
      throw UsageError("precision must lie in [30, " + std::to_string(hopf::kRealDigits) + "]");
    }
    hopf::Real tol;
    try {
      tol = hopf::to_real(hopf::parse_rational(opt.tol));
    } catch (const std::exception&) {
      throw UsageError("--tol is not a number: '" + opt.tol + "'");
    }
    if (!(tol > 0 && tol <= hopf::Real("1e-6"))) throw UsageError("--tol must lie in (0, 1e-6]");

    Report rep;
    if (solve->parsed()) {
      rep = cmd_solve(opt, tol);
    } else if (scan->parsed()) {
      rep = cmd_scan(opt);
    } else if (probes->parsed()) {
      rep = cmd_probes(opt);
    } else if (verify->parsed()) {
      rep = cmd_verify(opt, tol);
    } else {
      rep = cmd_biharmonic(opt);
    }
    rep.config["command"] = app.get_subcommands().front()->get_name();
    rep.config["precision"] = opt.precision;
    rep.config["tol"] = opt.tol;

    const auto text = render(rep, opt.format);
    if (opt.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(opt.out, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + opt.out + "'");
      file << text;
    }
    if (!rep.passed()) {
      for (const auto& c : rep.checks) {
        if (!c.passed) std::cerr << "FAILED: " << c.name << " (" << c.tag << ") " << c.detail << '\n';
      }
      return kExitCheckFailure;
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hopf::HopfError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
