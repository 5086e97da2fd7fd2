#include "pertbern/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include <json.hpp>

#include "pertbern/corpus.hpp"
#include "pertbern/error.hpp"
#include "pertbern/report.hpp"
#include "pertbern/verify.hpp"

namespace pertbern {

CoefficientScheme parse_scheme(const std::string& spec) {
  if (spec == "classic") return CoefficientScheme::classical();
  if (spec == "a1=1/n") return CoefficientScheme::reciprocal();
  if (spec.rfind("a1=", 0) == 0) {
    const char* first = spec.data() + 3;
    const char* last = spec.data() + spec.size();
    double c = 0.0;
    const auto res = std::from_chars(first, last, c);
    if (res.ec == std::errc() && res.ptr == last && first != last && std::isfinite(c)) {
      return CoefficientScheme::constant(c);
    }
  }
  throw ConfigError("malformed scheme '" + spec + "' (expected classic, a1=<number> or a1=1/n)");
}

namespace {

struct Output {
  std::string name;  // file stem when writing under --out
  std::string body;
};

std::string extension(Format f) { return f == Format::Json ? ".json" : ".csv"; }

void emit(const RunConfig& cfg, const std::vector<Output>& outputs, std::ostream& out) {
  if (cfg.out.empty()) {
    for (const auto& o : outputs) out << o.body;
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  if (ec) throw ConfigError("cannot create output directory '" + cfg.out + "': " + ec.message());
  for (const auto& o : outputs) {
    const auto path = std::filesystem::path(cfg.out) / (o.name + extension(cfg.format));
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ConfigError("cannot write '" + path.string() + "'");
    file << o.body;
    if (!file) throw ConfigError("write to '" + path.string() + "' failed");
  }
}

std::vector<const TestFunction*> selected_functions(const RunConfig& cfg) {
  std::vector<const TestFunction*> fs;
  if (cfg.functions.empty()) {
    for (const auto& f : standard_corpus()) fs.push_back(&f);
  } else {
    for (const auto& name : cfg.functions) fs.push_back(&corpus_function(name));
  }
  return fs;
}

std::optional<CoefficientScheme> operator_scheme(const RunConfig& cfg) {
  const bool perturbed = cfg.op.variant == Variant::M1;
  if (perturbed && cfg.scheme_spec.empty()) {
    throw ConfigError(to_string(cfg.op) + " needs --scheme");
  }
  if (!perturbed && !cfg.scheme_spec.empty()) {
    throw ConfigError("--scheme applies only to M1 operators");
  }
  if (!perturbed) return std::nullopt;
  return parse_scheme(cfg.scheme_spec);
}

std::vector<double> x_values(const RunConfig& cfg, int default_grid) {
  if (cfg.grid_points > 0) return uniform_grid(cfg.grid_points);
  if (!cfg.x.empty()) return cfg.x;
  if (default_grid > 0) return uniform_grid(default_grid);
  throw ConfigError("give --x or --grid");
}

void require_increasing(const std::vector<int>& ns) {
  for (std::size_t i = 1; i < ns.size(); ++i) {
    if (ns[i] <= ns[i - 1]) throw ConfigError("--n list must be strictly increasing");
  }
}

QuadratureOptions quad_options(const RunConfig& cfg) {
  QuadratureOptions q;
  q.points = cfg.quad_order;
  return q;
}

// Simple x/value tables share one layout for eval, moments and sweep.
struct Row {
  std::string key;  // extra leading columns, already joined
  double x;
  int n;
  double value;
  double error;
};

std::string table(const std::string& header, const std::vector<Row>& rows, Format f) {
  if (f == Format::Json) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rows) {
      a.push_back({{"key", r.key},
                   {"x", r.x},
                   {"n", r.n},
                   {"value", std::isfinite(r.value) ? nlohmann::json(r.value) : nlohmann::json()},
                   {"error", std::isfinite(r.error) ? nlohmann::json(r.error) : nlohmann::json()}});
    }
    return a.dump(2) + '\n';
  }
  std::string s = header + '\n';
  for (const auto& r : rows) {
    s += r.key + ',' + format_number(r.x) + ',' + std::to_string(r.n) + ',' +
         format_number(r.value) + ',' + format_number(r.error) + '\n';
  }
  return s;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  if (cfg.functions.size() != 1) throw ConfigError("eval takes exactly one --fn");
  if (cfg.n_list.size() != 1) throw ConfigError("eval takes exactly one --n");
  const TestFunction& f = corpus_function(cfg.functions[0]);
  const OperatorImage image(cfg.op, f, cfg.n_list[0], operator_scheme(cfg), quad_options(cfg));
  if (cfg.grid_points == 0 && cfg.x.size() == 1 && cfg.out.empty() && cfg.format == Format::Csv) {
    out << format_shortest(image(cfg.x[0])) << '\n';
    return kExitOk;
  }
  std::vector<Row> rows;
  for (double x : x_values(cfg, 0)) {
    const double v = image(x);
    rows.push_back({to_string(cfg.op) + ',' + f.name, x, cfg.n_list[0], v, v - f(x)});
  }
  emit(cfg, {{"eval_" + to_string(cfg.op) + "_" + f.name,
              table("operator,function,x,n,value,error", rows, cfg.format)}},
       out);
  return kExitOk;
}

int cmd_moments(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_list.empty()) throw ConfigError("moments needs --n");
  const auto scheme = operator_scheme(cfg);
  const auto xs = x_values(cfg, 101);
  // Central moments of order 0..4 by binomial expansion over monomials.
  std::vector<Row> rows;
  for (int n : cfg.n_list) {
    std::vector<OperatorImage> raw;
    for (int j = 0; j <= 4; ++j) raw.emplace_back(cfg.op, monomial(j), n, scheme, quad_options(cfg));
    for (int order = 0; order <= 4; ++order) {
      for (double x : xs) {
        double value = 0.0;
        double binom = 1.0;
        for (int j = 0; j <= order; ++j) {
          value += binom * std::pow(-x, order - j) * raw[j](x);
          binom = binom * (order - j) / (j + 1);
        }
        double closed = std::numeric_limits<double>::quiet_NaN();
        if (cfg.op == OperatorId{Family::Durrmeyer, Variant::Classic} && order >= 1) {
          closed = durrmeyer_central_moment(n, order, x);
        }
        rows.push_back({to_string(cfg.op) + ',' + std::to_string(order), x, n, value,
                        value - closed});
      }
    }
  }
  emit(cfg, {{"moments_" + to_string(cfg.op),
              table("operator,order,x,n,central_moment,residual", rows, cfg.format)}},
       out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyConfig vc;
  vc.x_grid = uniform_grid(cfg.grid_points > 0 ? cfg.grid_points : 101);
  vc.quad = quad_options(cfg);
  Verifier verifier(vc);

  std::vector<BoundReport> reports;
  const std::vector<int> default_n = {4, 8, 16, 32, 64};
  const std::vector<int>& ns = cfg.n_list.empty() ? default_n : cfg.n_list;
  if (cfg.theorem == "moments") {
    reports = verifier.check_moment_identities(ns);
  } else {
    SuiteConfig suite;
    if (cfg.theorem != "all") suite.theorems = {parse_theorem(cfg.theorem)};
    suite.functions = cfg.functions;
    for (const auto& name : cfg.functions) corpus_function(name);
    suite.n_list = ns;
    if (!cfg.scheme_spec.empty()) suite.schemes = {parse_scheme(cfg.scheme_spec)};
    reports = run_suite(verifier, suite);
  }

  // One output per (theorem, function), in order of first appearance.
  std::vector<std::pair<std::string, std::vector<BoundReport>>> groups;
  std::map<std::string, std::size_t> index;
  for (auto& r : reports) {
    const std::string key = std::string(to_string(r.theorem)) + "__" + r.function;
    auto [it, fresh] = index.emplace(key, groups.size());
    if (fresh) groups.push_back({key, {}});
    groups[it->second].second.push_back(r);
  }
  std::vector<Output> outputs;
  if (cfg.out.empty()) {
    outputs.push_back({"", cfg.format == Format::Json ? bound_reports_json(reports)
                                                      : bound_reports_csv(reports)});
  } else {
    for (const auto& [key, group] : groups) {
      outputs.push_back(
          {key, cfg.format == Format::Json ? bound_reports_json(group) : bound_reports_csv(group)});
    }
  }
  emit(cfg, outputs, out);
  const bool failed = std::any_of(reports.begin(), reports.end(),
                                  [](const BoundReport& r) { return r.status == CheckStatus::Fail; });
  return failed ? kExitFailure : kExitOk;
}

int cmd_voronovskaya(const RunConfig& cfg, std::ostream& out) {
  const auto scheme = operator_scheme(cfg);
  std::vector<int> ns = cfg.n_list;
  if (ns.empty()) ns = {16, 32, 64, 128, 256, 512, 1024};
  require_increasing(ns);
  if (cfg.x.empty()) throw ConfigError("voronovskaya needs --x");
  VerifyConfig vc;
  vc.quad = quad_options(cfg);
  Verifier verifier(vc);
  std::vector<Output> outputs;
  std::vector<ConvergenceReport> all;
  for (const TestFunction* f : selected_functions(cfg)) {
    if (!f->is_smooth(2)) {
      if (!cfg.functions.empty()) throw ConfigError(f->name + " is not C^2");
      continue;
    }
    std::vector<ConvergenceReport> group;
    for (double x : cfg.x) group.push_back(verifier.check_voronovskaya_limit(cfg.op, *f, x, ns, scheme));
    const std::string body = cfg.format == Format::Json ? convergence_reports_json(group)
                                                        : convergence_reports_csv(group);
    outputs.push_back({"voronovskaya_" + to_string(cfg.op) + "__" + f->name, body});
    all.insert(all.end(), group.begin(), group.end());
  }
  if (cfg.out.empty()) {
    outputs = {{"", cfg.format == Format::Json ? convergence_reports_json(all)
                                               : convergence_reports_csv(all)}};
  }
  emit(cfg, outputs, out);
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto scheme = operator_scheme(cfg);
  if (cfg.n_list.empty()) throw ConfigError("sweep needs --n");
  require_increasing(cfg.n_list);
  const auto xs = x_values(cfg, 0);
  std::vector<Output> outputs;
  std::vector<Row> all;
  for (const TestFunction* f : selected_functions(cfg)) {
    std::vector<Row> rows;
    for (int n : cfg.n_list) {
      const OperatorImage image(cfg.op, *f, n, scheme, quad_options(cfg));
      for (double x : xs) {
        const double v = image(x);
        rows.push_back({to_string(cfg.op) + ',' + f->name, x, n, v, v - (*f)(x)});
      }
    }
    outputs.push_back({"sweep_" + to_string(cfg.op) + "__" + f->name,
                       table("operator,function,x,n,value,error", rows, cfg.format)});
    all.insert(all.end(), rows.begin(), rows.end());
  }
  if (cfg.out.empty()) {
    outputs = {{"", table("operator,function,x,n,value,error", all, cfg.format)}};
  }
  emit(cfg, outputs, out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perturbed Bernstein-type operators: evaluation and bound verification"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string op_text;
  std::string variant_text;
  std::string format_text = "csv";

  const auto common = [&](CLI::App* sub, bool needs_op) {
    auto* o = sub->add_option("--op", op_text, "operator, e.g. bernstein, kantorovich-m1");
    if (needs_op) o->required();
    sub->add_option("--variant", variant_text, "classic, m1 or m2 (overrides the --op suffix)");
    sub->add_option("--scheme", cfg.scheme_spec, "classic, a1=<number> or a1=1/n");
    sub->add_option("--fn", cfg.functions, "corpus function names")->delimiter(',');
    sub->add_option("--n,--n-list", cfg.n_list, "degree(s), comma separated")->delimiter(',');
    sub->add_option("--x", cfg.x, "evaluation point(s)")->delimiter(',');
    sub->add_option("--grid", cfg.grid_points, "uniform grid size on [0, 1]")
        ->check(CLI::Range(2, 1 << 20));
    sub->add_option("--out", cfg.out, "output directory (one file per report group)");
    sub->add_option("--format", format_text, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--quad-order", cfg.quad_order, "Gauss points per cell")
        ->check(CLI::Range(1, 4096));
  };

  auto* eval = app.add_subcommand("eval", "evaluate L_n f at points");
  common(eval, true);
  auto* moments = app.add_subcommand("moments", "central moments of order 0..4");
  common(moments, true);
  auto* verify = app.add_subcommand("verify", "check theorem inequalities");
  common(verify, false);
  verify->add_option("--theorem", cfg.theorem, "theorem id, all, or moments");
  auto* voron = app.add_subcommand("voronovskaya", "scaled errors against the limit");
  common(voron, true);
  auto* sweep = app.add_subcommand("sweep", "L_n f and its error over n");
  common(sweep, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (!op_text.empty()) cfg.op = parse_operator(op_text);
    if (!variant_text.empty()) {
      cfg.op.variant = parse_variant(variant_text);
      cfg.op.validate();
    }
    cfg.format = format_text == "json" ? Format::Json : Format::Csv;
    for (double x : cfg.x) {
      if (!(x >= 0.0 && x <= 1.0)) throw ConfigError("--x values must lie in [0, 1]");
    }
    if (*eval) return cmd_eval(cfg, out);
    if (*moments) return cmd_moments(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*voron) return cmd_voronovskaya(cfg, out);
    return cmd_sweep(cfg, out);
  } catch (const std::invalid_argument& e) {
    // ConfigError and DomainError both land here.
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace pertbern
