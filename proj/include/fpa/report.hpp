// Renders results, comparisons, and sensitivity reports as ASCII
// tables, CSV, or JSON. Output is deterministic: fixed key order, two
// exact decimal digits everywhere, no locale dependence.

#ifndef FPA_REPORT_HPP
#define FPA_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "fpa/engine.hpp"

namespace fpa {

enum class ReportFormat {
    Table,
    Csv,
    Json,
};

std::optional<ReportFormat> format_from_name(std::string_view name);  // "table"/"csv"/"json"

std::string render_result(const FpResult& result, ReportFormat fmt);
std::string render_comparison(const ComparisonReport& report, ReportFormat fmt);
std::string render_sensitivity(const SensitivityReport& report, ReportFormat fmt);

}  // namespace fpa

#endif  // FPA_REPORT_HPP
