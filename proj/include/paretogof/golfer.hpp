#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "paretogof/statistic.hpp"

namespace paretogof {

/// How a computed statistic is compared with its reference value.
enum class Agreement {
    Absolute,         // |value - reference| <= tolerance
    SignificantFigure // value rounded to one significant figure equals reference
};

struct GolferCell {
    TestStatistic stat;
    double statistic = 0.0;
    double reference_statistic = 0.0;
    Agreement agreement = Agreement::Absolute;
    double statistic_tolerance = 0.0;
    double p_value = 0.0;
    double reference_p_value = 0.0;
    double p_value_tolerance = 0.02;

    bool statistic_ok() const;
    bool p_value_ok() const;
};

struct GolferReport {
    double beta_hat = 0.0;
    double reference_beta_hat = 2.495;
    std::size_t B = 0;
    std::uint64_t seed = 0;
    std::vector<GolferCell> cells;

    bool beta_ok() const;
    bool all_ok() const;
};

double round_to_one_significant_figure(double x);

/// The nine tests with their golfer reference values and tolerances.
std::vector<GolferCell> golfer_reference_cells(double mellin_a = kDefaultMellinA);

/// Statistics only (no bootstrap).
GolferReport golfer_statistics(double mellin_a = kDefaultMellinA);

/// Full pipeline: rescale by 700, fit the shape, compute all statistics and
/// bootstrap p-values with the shape held at its estimate.
GolferReport run_golfer(std::size_t B, std::uint64_t seed, double mellin_a = kDefaultMellinA, unsigned workers = 0);

void write_golfer_report(const GolferReport& report, std::ostream& out);

}  // namespace paretogof
