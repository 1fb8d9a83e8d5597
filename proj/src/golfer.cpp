#include "paretogof/golfer.hpp"

#include <cmath>
#include <fmt/format.h>
#include <ostream>

#include "paretogof/bootstrap.hpp"
#include "paretogof/dataset.hpp"
#include "paretogof/distributions.hpp"

namespace paretogof {

double round_to_one_significant_figure(double x) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    const double scale = std::pow(10.0, std::floor(std::log10(std::fabs(x))));
    return std::round(x / scale) * scale;
}

bool GolferCell::statistic_ok() const {
    if (agreement == Agreement::SignificantFigure)
        return std::fabs(round_to_one_significant_figure(statistic) - reference_statistic) <= 1e-12 * std::fabs(reference_statistic);
    return std::fabs(statistic - reference_statistic) <= statistic_tolerance;
}

bool GolferCell::p_value_ok() const { return std::fabs(p_value - reference_p_value) <= p_value_tolerance; }

bool GolferReport::beta_ok() const { return std::fabs(beta_hat - reference_beta_hat) <= 0.001; }

bool GolferReport::all_ok() const {
    if (!beta_ok()) return false;
    for (const auto& c : cells)
        if (!c.statistic_ok() || (B > 0 && !c.p_value_ok())) return false;
    return true;
}

std::vector<GolferCell> golfer_reference_cells(double mellin_a) {
    auto cell = [&](TestId id, double ref, Agreement how, double tol, double ref_p) {
        GolferCell c;
        c.stat = TestStatistic{id, 3, 2.0, mellin_a};
        c.reference_statistic = ref;
        c.agreement = how;
        c.statistic_tolerance = tol;
        c.reference_p_value = ref_p;
        return c;
    };
    using enum TestId;
    return {
        cell(KS, 0.125, Agreement::Absolute, 0.001, 0.3211),
        cell(CvM, 0.158, Agreement::Absolute, 0.001, 0.2873),
        cell(AD, 3.433, Agreement::Absolute, 0.005, 0.2857),
        cell(ZA, 39.332, Agreement::Absolute, 0.05, 0.0991),
        cell(G, 0.792, Agreement::Absolute, 0.005, 0.1783),
        cell(S1, 4e-3, Agreement::SignificantFigure, 0.0, 0.2245),
        cell(S2, 3e-3, Agreement::SignificantFigure, 0.0, 0.1929),
        cell(T1, 2e-3, Agreement::SignificantFigure, 0.0, 0.3311),
        cell(T2, 2e-3, Agreement::SignificantFigure, 0.0, 0.2869),
    };
}

GolferReport golfer_statistics(double mellin_a) {
    const Sample s = golfer_sample();
    GolferReport report;
    report.beta_hat = mom_estimate(s).beta();
    report.cells = golfer_reference_cells(mellin_a);
    for (auto& c : report.cells) c.statistic = evaluate(c.stat, s);
    return report;
}

GolferReport run_golfer(std::size_t B, std::uint64_t seed, double mellin_a, unsigned workers) {
    GolferReport report = golfer_statistics(mellin_a);
    BootstrapConfig cfg;
    cfg.B = B;
    cfg.seed = seed;
    cfg.refit = false;
    cfg.workers = workers;
    std::vector<TestStatistic> stats;
    for (const auto& c : report.cells) stats.push_back(c.stat);
    const auto reports = pvalues(golfer_sample(), stats, cfg);
    for (std::size_t i = 0; i < reports.size(); ++i) report.cells[i].p_value = reports[i].p_value;
    report.B = B;
    report.seed = seed;
    return report;
}

void write_golfer_report(const GolferReport& r, std::ostream& out) {
    auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
    out << fmt::format("golfer earnings / 700: n = 50, beta_hat = {:.4f} (reference {:.3f}) {}\n", r.beta_hat, r.reference_beta_hat,
                       mark(r.beta_ok()));
    out << fmt::format("bootstrap: B = {}, seed = {}, shape held fixed\n\n", r.B, r.seed);
    out << fmt::format("{:<10}{:>12}{:>12}{:>6}{:>10}{:>10}{:>6}\n", "test", "statistic", "reference", "", "p-value", "reference", "");
    for (const auto& c : r.cells) {
        const std::string ref = c.agreement == Agreement::SignificantFigure ? fmt::format("{:.0e}", c.reference_statistic)
                                                                            : fmt::format("{:.3f}", c.reference_statistic);
        out << fmt::format("{:<10}{:>12.5g}{:>12}{:>6}{:>10.4f}{:>10.4f}{:>6}\n", c.stat.name(), c.statistic, ref, mark(c.statistic_ok()),
                           c.p_value, c.reference_p_value, r.B > 0 ? mark(c.p_value_ok()) : "-");
    }
    bool any_reject = false;
    for (const auto& c : r.cells) any_reject = any_reject || (r.B > 0 && c.p_value <= 0.05);
    if (r.B > 0) out << fmt::format("\n{} at the 5% level\n", any_reject ? "at least one test rejects" : "no test rejects");
}

}  // namespace paretogof
