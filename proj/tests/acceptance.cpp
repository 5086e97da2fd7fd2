// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pertbern/cli.hpp"
#include "pertbern/corpus.hpp"
#include "pertbern/moduli.hpp"
#include "pertbern/operators.hpp"
#include "pertbern/report.hpp"
#include "pertbern/verify.hpp"

using namespace pertbern;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;
std::vector<int> selected;  // empty: all criteria

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  if (!selected.empty() && std::find(selected.begin(), selected.end(), id) == selected.end()) return;
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = budget_s <= 0.0 || secs < budget_s;
  const bool ok = o.ok && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %d. %s: %s (%.2f s%s)\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              secs, in_time ? "" : ", over budget");
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const std::vector<CoefficientScheme>& schemes() {
  static const std::vector<CoefficientScheme> s = {
      CoefficientScheme::constant(-1.0), CoefficientScheme::constant(0.0),
      CoefficientScheme::constant(1.0), CoefficientScheme::reciprocal()};
  return s;
}

struct Tally {
  int pass = 0, fail = 0, inconclusive = 0, skipped = 0;
  double worst_exact = INFINITY;

  void add(const BoundReport& r) {
    switch (r.status) {
      case CheckStatus::Pass: ++pass; break;
      case CheckStatus::Fail: ++fail; break;
      case CheckStatus::Inconclusive: ++inconclusive; break;
      case CheckStatus::Skipped: ++skipped; break;
    }
    if (r.status != CheckStatus::Skipped && r.moduli_exact) {
      worst_exact = std::min(worst_exact, r.worst_margin);
    }
  }
  std::string summary() const {
    std::ostringstream s;
    s << pass << " pass, " << fail << " fail, " << inconclusive << " inconclusive, " << skipped
      << " skipped; worst exact margin " << fmt("%.3g", worst_exact);
    return s.str();
  }
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  const std::vector<double> grid = uniform_grid(101);

  criterion(1, "M2 moments vs closed forms", 1.0, [&] {
    Verifier v;
    double worst = 0.0;
    for (int n : {2, 4, 8, 16, 64}) {
      for (const auto& r : v.check_m2_moments(n)) worst = std::max(worst, *std::max_element(r.lhs.begin(), r.lhs.end()));
    }
    return Outcome{worst <= 1e-10, "max residual " + fmt("%.3g", worst) + " (tol 1e-10)"};
  });

  criterion(2, "Durrmeyer central moments, orders 1-4, n <= 50", 5.0, [&] {
    Verifier v;
    double worst = 0.0;
    for (int n = 1; n <= 50; ++n) {
      for (const auto& r : v.check_durrmeyer_moments(n)) {
        worst = std::max(worst, *std::max_element(r.lhs.begin(), r.lhs.end()));
      }
    }
    return Outcome{worst <= 1e-10, "max residual " + fmt("%.3g", worst) + " (tol 1e-10)"};
  });

  criterion(3, "a1 = -1 reduces every M1 operator to its classic counterpart", 10.0, [&] {
    const auto classic = CoefficientScheme::constant(-1.0);
    double worst = 0.0;
    for (Family fam : {Family::Bernstein, Family::Kantorovich, Family::Durrmeyer, Family::Genuine}) {
      for (const auto& f : standard_corpus()) {
        for (int n : {4, 8, 16, 32}) {
          const OperatorImage a(OperatorId{fam, Variant::M1}, f, n, classic);
          const OperatorImage b(OperatorId{fam, Variant::Classic}, f, n);
          for (double x : grid) worst = std::max(worst, std::abs(a(x) - b(x)));
        }
      }
    }
    return Outcome{worst <= 1e-12, "max difference " + fmt("%.3g", worst) + " (tol 1e-12)"};
  });

  criterion(4, "direct estimates", 60.0, [&] {
    Verifier v;
    SuiteConfig suite;
    suite.theorems = {TheoremId::B_CLASSIC_DIRECT, TheoremId::B_M1_DIRECT,     TheoremId::B_M1_UNIFORM,
                      TheoremId::B_M2_DIRECT, TheoremId::K_CLASSIC_DIRECT, TheoremId::K_M1_DIRECT,
                      TheoremId::D_M1_DIRECT, TheoremId::U_M1_DIRECT,    TheoremId::DERIV_BOUND_B};
    suite.n_list = {4, 8, 16, 32, 64};
    suite.schemes = schemes();
    Tally t;
    for (const auto& r : run_suite(v, suite)) t.add(r);
    return Outcome{t.fail == 0 && t.worst_exact >= -1e-10, t.summary()};
  });

  criterion(5, "Voronovskaya limits", 60.0, [&] {
    // (a) n[B_n(e2) - e2](x) = x(1-x) for every n.
    double exact_worst = 0.0;
    const OperatorId b{Family::Bernstein, Variant::Classic};
    for (int n = 1; n <= 256; ++n) {
      const OperatorImage image(b, monomial(2), n);
      for (double x : grid) exact_worst = std::max(exact_worst, std::abs(n * (image(x) - x * x) - x * (1.0 - x)));
    }
    // (b) decay of the scaled error for the M1 families with a1 = 0.
    Verifier v;
    const auto zero = CoefficientScheme::constant(0.0);
    const std::vector<int> ns = {16, 32, 64, 128, 256, 512, 1024};
    double worst_rate = -INFINITY;
    std::string worst_case;
    bool all_fitted = true;
    for (Family fam : {Family::Bernstein, Family::Kantorovich, Family::Durrmeyer, Family::Genuine}) {
      for (const char* name : {"exp", "sin_pi"}) {
        for (double x : {0.3, 0.7}) {
          const auto r = v.check_voronovskaya_limit(OperatorId{fam, Variant::M1}, corpus_function(name), x, ns, zero);
          if (!r.fitted_rate) {
            all_fitted = false;
            continue;
          }
          if (*r.fitted_rate > worst_rate) {
            worst_rate = *r.fitted_rate;
            worst_case = to_string(r.op) + " " + r.function + " x=" + fmt("%.2g", x);
          }
        }
      }
    }
    const bool ok = exact_worst <= 1e-12 && all_fitted && worst_rate <= -0.9;
    return Outcome{ok, "(a) max deviation " + fmt("%.3g", exact_worst) + "; (b) slowest fitted rate " +
                           fmt("%.4f", worst_rate) + " at " + worst_case + " (need <= -0.9)"};
  });

  criterion(6, "quantitative Voronovskaya suites", 120.0, [&] {
    Verifier v;
    SuiteConfig suite;
    suite.theorems = {TheoremId::VORON_B_M1, TheoremId::VORON_K_M1, TheoremId::VORON_D_M1,
                      TheoremId::VORON_U_M1, TheoremId::D_CLASSIC_VORON};
    suite.n_list = {8, 16, 32, 64};
    suite.schemes = schemes();
    Tally t;
    for (const auto& r : run_suite(v, suite)) t.add(r);
    return Outcome{t.fail == 0 && t.worst_exact >= -1e-10, t.summary()};
  });

  criterion(7, "sigma cross-check and the 1/(4n) bound", 0.0, [&] {
    Verifier v;
    double worst_closed = 0.0;
    double worst_bound = INFINITY;
    bool ok = true;
    for (int n : {2, 3, 4, 5, 8, 16, 32, 50, 64}) {
      for (const auto& r : v.check_sigma(n)) {
        ok = ok && r.pass();
        if (r.function == "sigma_n_bound") {
          worst_bound = std::min(worst_bound, r.worst_margin);
        } else {
          worst_closed = std::max(worst_closed, -r.worst_margin);
        }
      }
    }
    ok = ok && worst_closed <= 1e-12 && worst_bound >= 0.0;
    return Outcome{ok, "max closed-form residual " + fmt("%.3g", worst_closed) +
                           ", min margin to 1/(4n) " + fmt("%.3g", worst_bound)};
  });

  criterion(8, "x log x: omega2/delta bounded, omega1/delta unbounded", 0.0, [&] {
    const auto& g = corpus_function("xlogx");
    double w2_max = 0.0, w2_eighth = 0.0;
    for (int k = 3; k <= 14; ++k) {
      const double d = std::ldexp(1.0, -k);
      const double r = omega2(g, d).value / d;
      w2_max = std::max(w2_max, r);
      if (k == 3) w2_eighth = r;
    }
    const double small = omega1(g, std::ldexp(1.0, -14)).value * std::ldexp(1.0, 14);
    const double large = omega1(g, 0.125).value * 8.0;
    const bool ok = w2_max <= 2.0 * w2_eighth && small >= 3.0 * large;
    return Outcome{ok, "max omega2/delta " + fmt("%.4f", w2_max) + " vs " + fmt("%.4f", w2_eighth) +
                           " at 1/8; omega1/delta ratio " + fmt("%.3f", small / large)};
  });

  criterion(9, "two full-suite runs are byte-identical", 0.0, [&] {
    const auto base = std::filesystem::temp_directory_path() / "pertbern_acceptance";
    std::filesystem::remove_all(base);
    std::ostringstream sink;
    for (const char* run_dir : {"a", "b"}) {
      const std::string out = (base / run_dir).string();
      const char* argv[] = {"pertbern", "verify", "--theorem", "all", "--out", out.c_str()};
      if (run(6, argv, sink, sink) != 0) return Outcome{false, "suite run failed: " + sink.str()};
    }
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(base / "a")) {
      const auto other = base / "b" / entry.path().filename();
      if (!std::filesystem::exists(other) || read_file(entry.path()) != read_file(other)) {
        return Outcome{false, "mismatch in " + entry.path().filename().string()};
      }
      ++files;
    }
    const auto count_b = std::distance(std::filesystem::directory_iterator(base / "b"),
                                       std::filesystem::directory_iterator{});
    std::filesystem::remove_all(base);
    return Outcome{files > 0 && count_b == files, std::to_string(files) + " report files compared"};
  });

  std::printf("%s: %d criterion failure(s)\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
