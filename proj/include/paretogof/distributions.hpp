#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "paretogof/random.hpp"
#include "paretogof/sample.hpp"

namespace paretogof {

/// Shape parameter of the Pareto type I law F(x) = 1 - x^{-beta}, x >= 1.
class ParetoParams {
public:
    explicit ParetoParams(double beta);
    double beta() const noexcept { return beta_; }

private:
    double beta_;
};

double pareto_cdf(double x, ParetoParams p);
double pareto_quantile(double u, ParetoParams p);
Sample sample_pareto(std::size_t n, ParetoParams p, RandomStream& rng);

/// beta_hat = mean / (mean - 1). Throws EstimationError when mean <= 1.
ParetoParams mom_estimate(const Sample& s);
ParetoParams mom_estimate_from_mean(double mean);

enum class Family {
    Pareto,
    Gamma,
    Weibull,
    Lognormal,
    LinearFailureRate,
    BetaExponential,
    Dhillon,
    HalfNormal,
    LognormalMixture,
    ExponentialMixture,
};

/// A data-generating law used as an alternative (or as the null itself).
///
/// All families are shifted onto [1, inf). For the two mixture families
/// theta is the probability of drawing from the non-Pareto component.
struct AlternativeSpec {
    Family family = Family::Pareto;
    double theta = 2.0;

    void validate() const;
    std::string label() const;

    friend bool operator==(const AlternativeSpec&, const AlternativeSpec&) = default;
};

// Pareto shapes of the mixture's Pareto component. The lognormal one has
// mean e^{1/2}, the mean of an unshifted LN(1).
double lognormal_mixture_pareto_beta();    // e^{1/2} / (e^{1/2} - 1)
double exponential_mixture_pareto_beta();  // 2

/// Parses labels such as "P(2)", "W(1.5)", "LNMix(0.9)". Throws ConfigError
/// naming the family when it is unknown.
AlternativeSpec parse_alternative(std::string_view text);

double sample_alternative_one(const AlternativeSpec& spec, RandomStream& rng);
Sample sample_alternative(const AlternativeSpec& spec, std::size_t n, RandomStream& rng);

}  // namespace paretogof
