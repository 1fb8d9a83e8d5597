#include "paretogof/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "paretogof/errors.hpp"
#include "paretogof/parallel.hpp"

namespace paretogof {

namespace {

// Guards against an unbounded redraw loop when an alternative almost never
// yields a usable sample.
constexpr std::size_t kMaxRedraws = 1000;

unsigned workers_for(const BootstrapConfig& cfg) { return cfg.workers ? cfg.workers : worker_count(); }

// Evaluates every statistic; returns false if any is undefined on this sample.
bool evaluate_all(std::span<const TestStatistic> stats, const Sample& s, std::optional<ParetoParams> shape, double* out) {
    try {
        for (std::size_t t = 0; t < stats.size(); ++t) out[t] = evaluate(stats[t], s, shape);
    } catch (const DomainError&) {
        return false;
    } catch (const EstimationError&) {
        return false;
    }
    for (std::size_t t = 0; t < stats.size(); ++t)
        if (!std::isfinite(out[t])) return false;
    return true;
}

}  // namespace

void BootstrapConfig::validate() const {
    if (B < 100) throw ConfigError("B", "at least 100 replications are required");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha", "must lie in (0, 1)");
}

std::vector<TestReport> pvalues(const Sample& s, std::span<const TestStatistic> stats, const BootstrapConfig& cfg) {
    cfg.validate();
    const ParetoParams fit = mom_estimate(s);
    const std::size_t k = stats.size();

    std::vector<double> observed(k);
    for (std::size_t t = 0; t < k; ++t) observed[t] = evaluate(stats[t], s, fit);

    std::vector<double> boot(cfg.B * k);
    std::vector<std::size_t> redraws(cfg.B, 0);
    const std::optional<ParetoParams> shape = cfg.refit ? std::nullopt : std::optional(fit);
    parallel_for(
        cfg.B,
        [&](std::size_t b) {
            auto rng = RandomStream::derive(cfg.seed, {0x7076616cULL, b});
            for (;;) {
                const Sample star = sample_pareto(s.size(), fit, rng);
                if (evaluate_all(stats, star, shape, &boot[b * k])) return;
                if (++redraws[b] > kMaxRedraws) throw EstimationError("bootstrap: too many degenerate resamples");
            }
        },
        workers_for(cfg));

    std::size_t total_redraws = 0;
    for (auto r : redraws) total_redraws += r;

    std::vector<TestReport> reports(k);
    for (std::size_t t = 0; t < k; ++t) {
        std::size_t exceed = 0;
        for (std::size_t b = 0; b < cfg.B; ++b)
            if (boot[b * k + t] >= observed[t]) ++exceed;
        auto& r = reports[t];
        r.test = stats[t].name();
        r.statistic = observed[t];
        r.p_value = static_cast<double>(1 + exceed) / static_cast<double>(cfg.B + 1);
        r.beta_hat = fit.beta();
        r.B = cfg.B;
        r.seed = cfg.seed;
        r.refit = cfg.refit;
        r.redraws = total_redraws;
    }
    return reports;
}

TestReport pvalue(const Sample& s, const TestStatistic& stat, const BootstrapConfig& cfg) {
    return pvalues(s, std::span(&stat, 1), cfg).front();
}

std::size_t critical_rank(std::size_t mc, double alpha) {
    // The epsilon keeps e.g. 10000 * 0.95 from landing on 9499.999...
    const double target = static_cast<double>(mc) * (1.0 - alpha);
    const auto rank = static_cast<std::size_t>(std::floor(target + 1e-9));
    return std::clamp<std::size_t>(rank, 1, mc);
}

std::vector<PowerEstimate> warp_speed_batch(const AlternativeSpec& alt, std::size_t n, std::span<const TestStatistic> stats,
                                            const BootstrapConfig& cfg, CellKey key) {
    cfg.validate();
    alt.validate();
    for (const auto& st : stats)
        if (!st.uses_shape() && static_cast<std::size_t>(st.m) > n) throw OrderError("block order m exceeds the sample size");

    const std::size_t mc = cfg.B;
    const std::size_t k = stats.size();
    std::vector<double> data_stat(mc * k), boot_stat(mc * k);
    std::vector<std::size_t> redraws(mc, 0);

    parallel_for(
        mc,
        [&](std::size_t r) {
            auto rng = RandomStream::derive(cfg.seed, {key.alternative, key.size, r});
            for (;;) {
                const Sample data = sample_alternative(alt, n, rng);
                const double mean = data.mean();
                if (mean > 1.0 && std::isfinite(mean)) {
                    const ParetoParams fit = mom_estimate_from_mean(mean);
                    const Sample star = sample_pareto(n, fit, rng);
                    const std::optional<ParetoParams> shape = cfg.refit ? std::nullopt : std::optional(fit);
                    if (evaluate_all(stats, data, fit, &data_stat[r * k]) && evaluate_all(stats, star, shape, &boot_stat[r * k]))
                        return;
                }
                if (++redraws[r] > kMaxRedraws) throw EstimationError("warp-speed: too many degenerate replications");
            }
        },
        workers_for(cfg));

    std::size_t total_redraws = 0;
    for (auto r : redraws) total_redraws += r;

    const std::size_t rank = critical_rank(mc, cfg.alpha);
    std::vector<PowerEstimate> out(k);
    std::vector<double> column(mc);
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t r = 0; r < mc; ++r) column[r] = boot_stat[r * k + t];
        std::nth_element(column.begin(), column.begin() + static_cast<std::ptrdiff_t>(rank - 1), column.end());
        const double crit = column[rank - 1];
        std::size_t rejections = 0;
        for (std::size_t r = 0; r < mc; ++r)
            if (data_stat[r * k + t] > crit) ++rejections;
        out[t] = {static_cast<double>(rejections) / static_cast<double>(mc), mc, crit, total_redraws};
    }
    return out;
}

PowerEstimate warp_speed_power(const AlternativeSpec& alt, std::size_t n, const TestStatistic& stat, const BootstrapConfig& cfg,
                               CellKey key) {
    return warp_speed_batch(alt, n, std::span(&stat, 1), cfg, key).front();
}

}  // namespace paretogof
