#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "paretogof/distributions.hpp"
#include "paretogof/sample.hpp"
#include "paretogof/statistic.hpp"

namespace paretogof {

struct BootstrapConfig {
    std::size_t B = 10000;  // bootstrap samples, or Monte Carlo replications for warp-speed runs
    double alpha = 0.05;
    std::uint64_t seed = 20240101;
    // Re-estimate the shape on every bootstrap sample. When false the shape
    // stays at the estimate from the observed data.
    bool refit = true;
    unsigned workers = 0;  // 0: use worker_count()

    void validate() const;
};

struct TestReport {
    std::string test;
    double statistic = 0.0;
    double p_value = 1.0;
    double beta_hat = 0.0;
    std::size_t B = 0;
    std::uint64_t seed = 0;
    bool refit = true;
    std::size_t redraws = 0;
};

/// Parametric-bootstrap p-value (1 + #{T* >= T}) / (B + 1).
TestReport pvalue(const Sample& s, const TestStatistic& stat, const BootstrapConfig& cfg);

/// Same as pvalue for several tests, all evaluated on one shared set of
/// bootstrap samples.
std::vector<TestReport> pvalues(const Sample& s, std::span<const TestStatistic> stats, const BootstrapConfig& cfg);

struct PowerEstimate {
    double rejection_rate = 0.0;
    std::size_t mc = 0;
    double critical_value = 0.0;
    std::size_t redraws = 0;  // degenerate replications drawn again
};

/// Identifies a (alternative, sample size) cell of a study; it selects the
/// replication streams so that a cell reproduces independently of its neighbours.
struct CellKey {
    std::uint64_t alternative = 0;
    std::uint64_t size = 0;
};

/// 1-based rank floor(mc (1 - alpha)) of the critical bootstrap statistic, at least 1.
std::size_t critical_rank(std::size_t mc, double alpha);

/// Warp-speed bootstrap power: one bootstrap sample per Monte Carlo
/// replication, pooled into a single critical value. All tests see the same
/// data and bootstrap samples in each replication.
std::vector<PowerEstimate> warp_speed_batch(const AlternativeSpec& alt, std::size_t n, std::span<const TestStatistic> stats,
                                            const BootstrapConfig& cfg, CellKey key = {});

PowerEstimate warp_speed_power(const AlternativeSpec& alt, std::size_t n, const TestStatistic& stat, const BootstrapConfig& cfg,
                               CellKey key = {});

}  // namespace paretogof
