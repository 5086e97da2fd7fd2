#pragma once

#include <string>
#include <vector>

#include "pertbern/verify.hpp"

namespace pertbern {

/// %.17g, or "nan"/"inf"/"-inf".
std::string format_number(double v);
/// Shortest decimal text that parses back to v.
std::string format_shortest(double v);

/// One row per grid point; skipped reports emit a single row with empty
/// numeric fields. Header always present, LF line endings.
std::string bound_reports_csv(const std::vector<BoundReport>& reports);
/// One row per n; fitted_rate is repeated on every row and empty when absent.
std::string convergence_reports_csv(const std::vector<ConvergenceReport>& reports);

/// JSON array, two-space indent, trailing newline. Non-finite numbers and
/// absent values are written as null.
std::string bound_reports_json(const std::vector<BoundReport>& reports);
std::string convergence_reports_json(const std::vector<ConvergenceReport>& reports);

/// Inverses of the JSON writers; throw ConfigError on malformed input.
std::vector<BoundReport> parse_bound_reports_json(const std::string& text);
std::vector<ConvergenceReport> parse_convergence_reports_json(const std::string& text);

}  // namespace pertbern
