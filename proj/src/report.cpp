#include "paretogof/report.hpp"

#include <fmt/format.h>
#include <json.hpp>
#include <ostream>

#include "paretogof/errors.hpp"

namespace paretogof {

ReportFormat parse_report_format(std::string_view text) {
    if (text == "csv") return ReportFormat::Csv;
    if (text == "pretty") return ReportFormat::Pretty;
    if (text == "json") return ReportFormat::Json;
    throw ConfigError("format", fmt::format("unknown format '{}', expected csv, pretty or json", text));
}

void write_reports(std::span<const TestReport> reports, double alpha, std::size_t n, ReportFormat format, std::ostream& out) {
    switch (format) {
        case ReportFormat::Csv:
            out << "test,statistic,p_value,beta_hat,n,B,seed,refit\n";
            for (const auto& r : reports)
                out << fmt::format("{},{:.10g},{:.6f},{:.6f},{},{},{},{}\n", r.test, r.statistic, r.p_value, r.beta_hat, n, r.B, r.seed,
                                   r.refit ? "true" : "false");
            return;
        case ReportFormat::Pretty: {
            if (!reports.empty())
                out << fmt::format("n = {}, beta_hat = {:.4f}, B = {}, seed = {}, shape {}\n", n, reports.front().beta_hat,
                                   reports.front().B, reports.front().seed, reports.front().refit ? "refitted" : "held fixed");
            out << fmt::format("{:<12}{:>14}{:>10}  {}\n", "test", "statistic", "p-value", fmt::format("reject at {:g}", alpha));
            for (const auto& r : reports)
                out << fmt::format("{:<12}{:>14.6g}{:>10.4f}  {}\n", r.test, r.statistic, r.p_value, r.p_value <= alpha ? "yes" : "no");
            return;
        }
        case ReportFormat::Json: {
            nlohmann::ordered_json doc;
            doc["schema_version"] = kReportSchemaVersion;
            doc["n"] = n;
            doc["alpha"] = alpha;
            auto& arr = doc["tests"] = nlohmann::ordered_json::array();
            for (const auto& r : reports) {
                arr.push_back({{"test", r.test},
                               {"statistic", r.statistic},
                               {"p_value", r.p_value},
                               {"beta_hat", r.beta_hat},
                               {"B", r.B},
                               {"seed", r.seed},
                               {"refit", r.refit},
                               {"redraws", r.redraws}});
            }
            out << doc.dump(2) << '\n';
            return;
        }
    }
}

}  // namespace paretogof
