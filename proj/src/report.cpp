#include "pertbern/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "pertbern/error.hpp"

namespace pertbern {

using nlohmann::json;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// CSV

std::string bound_reports_csv(const std::vector<BoundReport>& reports) {
  std::string out = "theorem,function,n,scheme,x,lhs,rhs,margin,moduli_exact,status\n";
  for (const auto& r : reports) {
    const std::string head = std::string(to_string(r.theorem)) + ',' + r.function + ',' +
                             std::to_string(r.n) + ',' + r.scheme + ',';
    const std::string tail = std::string(r.moduli_exact ? "true" : "false") + ',' +
                             std::string(to_string(r.status)) + '\n';
    if (r.lhs.empty()) {
      out += head + ",,,," + tail;
      continue;
    }
    for (std::size_t i = 0; i < r.lhs.size(); ++i) {
      out += head + format_number(r.x_grid[i]) + ',' + format_number(r.lhs[i]) + ',' +
             format_number(r.rhs[i]) + ',' + format_number(r.rhs[i] - r.lhs[i]) + ',' + tail;
    }
  }
  return out;
}

std::string convergence_reports_csv(const std::vector<ConvergenceReport>& reports) {
  std::string out = "operator,function,x,n,scaled_error,fitted_rate\n";
  for (const auto& r : reports) {
    const std::string rate = r.fitted_rate ? format_number(*r.fitted_rate) : "";
    for (std::size_t i = 0; i < r.n_list.size(); ++i) {
      out += to_string(r.op) + ',' + r.function + ',' + format_number(r.x) + ',' +
             std::to_string(r.n_list[i]) + ',' + format_number(r.scaled_error[i]) + ',' + rate +
             '\n';
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json numbers(const std::vector<double>& vs) {
  json a = json::array();
  for (double v : vs) a.push_back(number(v));
  return a;
}

double read_number(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

std::vector<double> read_numbers(const json& j) {
  std::vector<double> out;
  for (const auto& v : j) out.push_back(read_number(v));
  return out;
}

json to_json(const BoundReport& r) {
  return json{{"theorem", std::string(to_string(r.theorem))},
              {"function", r.function},
              {"n", r.n},
              {"scheme", r.scheme},
              {"x", numbers(r.x_grid)},
              {"lhs", numbers(r.lhs)},
              {"rhs", numbers(r.rhs)},
              {"worst_margin", number(r.worst_margin)},
              {"moduli_exact", r.moduli_exact},
              {"tolerance", number(r.tolerance)},
              {"status", std::string(to_string(r.status))},
              {"note", r.note}};
}

json to_json(const ConvergenceReport& r) {
  json n_list = json::array();
  for (int n : r.n_list) n_list.push_back(n);
  return json{{"operator", to_string(r.op)},
              {"function", r.function},
              {"scheme", r.scheme},
              {"x", number(r.x)},
              {"n", n_list},
              {"scaled_error", numbers(r.scaled_error)},
              {"fitted_rate", r.fitted_rate ? number(*r.fitted_rate) : json(nullptr)},
              {"limit_formula", r.limit_formula}};
}

json parse_array(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report JSON: ") + e.what());
  }
  if (!j.is_array()) throw ConfigError("report JSON must be an array");
  return j;
}

std::string dump(const json& j) { return j.dump(2) + '\n'; }

}  // namespace

std::string bound_reports_json(const std::vector<BoundReport>& reports) {
  json a = json::array();
  for (const auto& r : reports) a.push_back(to_json(r));
  return dump(a);
}

std::string convergence_reports_json(const std::vector<ConvergenceReport>& reports) {
  json a = json::array();
  for (const auto& r : reports) a.push_back(to_json(r));
  return dump(a);
}

std::vector<BoundReport> parse_bound_reports_json(const std::string& text) {
  std::vector<BoundReport> out;
  try {
    for (const auto& j : parse_array(text)) {
      BoundReport r;
      r.theorem = parse_theorem(j.at("theorem").get<std::string>());
      r.function = j.at("function").get<std::string>();
      r.n = j.at("n").get<int>();
      r.scheme = j.at("scheme").get<std::string>();
      r.x_grid = read_numbers(j.at("x"));
      r.lhs = read_numbers(j.at("lhs"));
      r.rhs = read_numbers(j.at("rhs"));
      r.worst_margin = read_number(j.at("worst_margin"));
      r.moduli_exact = j.at("moduli_exact").get<bool>();
      r.tolerance = read_number(j.at("tolerance"));
      r.status = parse_status(j.at("status").get<std::string>());
      r.note = j.at("note").get<std::string>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed bound report: ") + e.what());
  }
  return out;
}

std::vector<ConvergenceReport> parse_convergence_reports_json(const std::string& text) {
  std::vector<ConvergenceReport> out;
  try {
    for (const auto& j : parse_array(text)) {
      ConvergenceReport r;
      r.op = parse_operator(j.at("operator").get<std::string>());
      r.function = j.at("function").get<std::string>();
      r.scheme = j.at("scheme").get<std::string>();
      r.x = read_number(j.at("x"));
      r.n_list = j.at("n").get<std::vector<int>>();
      r.scaled_error = read_numbers(j.at("scaled_error"));
      if (!j.at("fitted_rate").is_null()) r.fitted_rate = j.at("fitted_rate").get<double>();
      r.limit_formula = j.at("limit_formula").get<std::string>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed convergence report: ") + e.what());
  }
  return out;
}

}  // namespace pertbern
