#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "paretogof/bootstrap.hpp"
#include "paretogof/distributions.hpp"
#include "paretogof/statistic.hpp"

namespace paretogof {

struct PowerStudyConfig {
    std::vector<TestStatistic> tests;
    std::vector<AlternativeSpec> alternatives;
    std::vector<std::size_t> sample_sizes;
    std::size_t mc = 10000;
    double alpha = 0.05;
    std::uint64_t seed = 20240101;
    bool refit = true;
    unsigned workers = 0;

    void validate() const;
};

/// Parses the key = value study format:
///
///     # comment
///     tests        = KS, CvM, S2          (or "all")
///     alternatives = P(2), W(1.5), LNMix(0.9)
///     sample_sizes = 20, 30
///     mc           = 10000
///     alpha        = 0.05
///     seed         = 42
///     m = 3   a = 2   mellin_a = 2   refit = true     (optional)
///
/// Errors are ConfigError carrying the offending field name.
PowerStudyConfig parse_power_config(std::string_view text);
PowerStudyConfig load_power_config(const std::string& path);

struct PowerCell {
    std::size_t alternative = 0;  // index into config.alternatives
    std::size_t n = 0;
    std::size_t test = 0;  // index into config.tests
    PowerEstimate estimate;
    double se = 0.0;
    int percent = 0;  // rounded half up
    bool top_two = false;
    bool failed = false;
    std::string error;
};

struct PowerTable {
    PowerStudyConfig config;
    // Row-major: alternatives outer, sample sizes inner, tests across.
    std::vector<PowerCell> cells;
    std::vector<std::string> warnings;

    const PowerCell& at(std::size_t alt, std::size_t n_index, std::size_t test) const;
};

/// Rounds 100 * rejections / mc to the nearest integer, halves up.
int rounded_percent(std::size_t rejections, std::size_t mc);

PowerTable run_power_study(const PowerStudyConfig& cfg);

void write_power_csv(const PowerTable& table, std::ostream& out);
void write_power_pretty(const PowerTable& table, std::ostream& out);

/// 64-bit FNV-1a, used to tag output with the config it came from.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace paretogof
