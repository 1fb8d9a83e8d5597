#pragma once

#include <iosfwd>
#include <span>
#include <string_view>

#include "paretogof/bootstrap.hpp"

namespace paretogof {

enum class ReportFormat { Csv, Pretty, Json };

ReportFormat parse_report_format(std::string_view text);

// Schema version stamped into JSON reports.
inline constexpr int kReportSchemaVersion = 1;

/// Renders bootstrap test reports. Floating values use a fixed number of
/// significant digits so equal inputs give byte-identical output.
void write_reports(std::span<const TestReport> reports, double alpha, std::size_t n, ReportFormat format, std::ostream& out);

}  // namespace paretogof
