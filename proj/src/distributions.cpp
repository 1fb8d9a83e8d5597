#include "paretogof/distributions.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <utility>

#include "paretogof/errors.hpp"

namespace paretogof {

ParetoParams::ParetoParams(double beta) : beta_(beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("Pareto shape must be positive and finite");
}

double pareto_cdf(double x, ParetoParams p) {
    if (!(x >= 1.0)) throw DomainError("pareto_cdf: x must be >= 1");
    return -std::expm1(-p.beta() * std::log(x));
}

double pareto_quantile(double u, ParetoParams p) {
    if (!(u >= 0.0 && u < 1.0)) throw DomainError("pareto_quantile: u must lie in [0, 1)");
    return std::exp(-std::log1p(-u) / p.beta());
}

Sample sample_pareto(std::size_t n, ParetoParams p, RandomStream& rng) {
    if (n == 0) throw DomainError("sample_pareto: n must be >= 1");
    std::vector<double> xs(n);
    for (auto& x : xs) x = pareto_quantile(rng.uniform(), p);
    return Sample(std::move(xs));
}

ParetoParams mom_estimate_from_mean(double mean) {
    if (!(mean > 1.0) || !std::isfinite(mean))
        throw EstimationError("method-of-moments estimate undefined: sample mean must exceed 1");
    return ParetoParams(mean / (mean - 1.0));
}

ParetoParams mom_estimate(const Sample& s) {
    if (s.empty()) throw EstimationError("method-of-moments estimate undefined: empty sample");
    return mom_estimate_from_mean(s.mean());
}

namespace {

struct FamilyName {
    Family family;
    std::string_view name;
};

// First entry per family is the canonical label.
constexpr std::array kFamilyNames{
    FamilyName{Family::Pareto, "P"},
    FamilyName{Family::Pareto, "Pareto"},
    FamilyName{Family::Gamma, "Gamma"},
    FamilyName{Family::Weibull, "W"},
    FamilyName{Family::Weibull, "Weibull"},
    FamilyName{Family::Lognormal, "LN"},
    FamilyName{Family::Lognormal, "Lognormal"},
    FamilyName{Family::LinearFailureRate, "LFR"},
    FamilyName{Family::LinearFailureRate, "LF"},
    FamilyName{Family::BetaExponential, "BEX"},
    FamilyName{Family::BetaExponential, "BE"},
    FamilyName{Family::Dhillon, "DH"},
    FamilyName{Family::Dhillon, "D"},
    FamilyName{Family::HalfNormal, "HN"},
    FamilyName{Family::LognormalMixture, "LNMix"},
    FamilyName{Family::ExponentialMixture, "ExpMix"},
};

bool is_mixture(Family f) { return f == Family::LognormalMixture || f == Family::ExponentialMixture; }

std::string_view canonical_name(Family f) {
    for (const auto& e : kFamilyNames)
        if (e.family == f) return e.name;
    return "?";
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

void AlternativeSpec::validate() const {
    if (!std::isfinite(theta)) throw DomainError("alternative parameter must be finite");
    if (is_mixture(family)) {
        if (theta < 0.0 || theta > 1.0) throw DomainError("mixture probability must lie in [0, 1]");
    } else if (!(theta > 0.0)) {
        throw DomainError("alternative parameter must be positive");
    }
}

std::string AlternativeSpec::label() const { return fmt::format("{}({:g})", canonical_name(family), theta); }

double lognormal_mixture_pareto_beta() { return 1.0 / -std::expm1(-0.5); }
double exponential_mixture_pareto_beta() { return 2.0; }

AlternativeSpec parse_alternative(std::string_view text) {
    const std::string_view t = trim(text);
    const auto open = t.find('(');
    const auto close = t.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open || close + 1 != t.size())
        throw ConfigError("alternatives", fmt::format("malformed alternative '{}', expected NAME(value)", t));
    const std::string_view name = trim(t.substr(0, open));
    const std::string_view arg = trim(t.substr(open + 1, close - open - 1));

    const FamilyName* match = nullptr;
    for (const auto& e : kFamilyNames)
        if (e.name == name) match = &e;
    if (match == nullptr) throw ConfigError("alternatives", fmt::format("unknown family '{}'", name));

    double theta = 0.0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), theta);
    if (ec != std::errc{} || ptr != arg.data() + arg.size())
        throw ConfigError("alternatives", fmt::format("bad parameter '{}' for family '{}'", arg, name));

    AlternativeSpec spec{match->family, theta};
    try {
        spec.validate();
    } catch (const DomainError& e) {
        throw ConfigError("alternatives", fmt::format("{}: {}", t, e.what()));
    }
    return spec;
}

double sample_alternative_one(const AlternativeSpec& spec, RandomStream& rng) {
    const double theta = spec.theta;
    switch (spec.family) {
        case Family::Pareto:
            return pareto_quantile(rng.uniform(), ParetoParams(theta));
        case Family::Gamma:
            return 1.0 + rng.gamma(theta);
        case Family::Weibull:
            return 1.0 + std::pow(rng.exponential(), 1.0 / theta);
        case Family::Lognormal:
            return 1.0 + std::exp(theta * rng.normal());
        case Family::LinearFailureRate: {
            // Inverts the survival function exp(-y - theta y^2 / 2).
            const double e = rng.exponential();
            return 1.0 + 2.0 * e / (1.0 + std::sqrt(1.0 + 2.0 * theta * e));
        }
        case Family::BetaExponential: {
            // Inverts F(y) = (1 - e^{-y})^theta.
            const double u = rng.uniform_open();
            return 1.0 - std::log1p(-std::pow(u, 1.0 / theta));
        }
        case Family::Dhillon: {
            // Inverts F(y) = 1 - exp(-(log(y + 1))^{theta + 1}).
            const double e = rng.exponential();
            return 1.0 + std::expm1(std::pow(e, 1.0 / (theta + 1.0)));
        }
        case Family::HalfNormal:
            return 1.0 + theta * std::fabs(rng.normal());
        case Family::LognormalMixture:
            if (rng.uniform() < theta) return 1.0 + std::exp(rng.normal());
            return pareto_quantile(rng.uniform(), ParetoParams(lognormal_mixture_pareto_beta()));
        case Family::ExponentialMixture:
            if (rng.uniform() < theta) return 1.0 + 0.5 * rng.exponential();
            return pareto_quantile(rng.uniform(), ParetoParams(exponential_mixture_pareto_beta()));
    }
    throw DomainError("unknown alternative family");
}

Sample sample_alternative(const AlternativeSpec& spec, std::size_t n, RandomStream& rng) {
    spec.validate();
    if (n == 0) throw DomainError("sample_alternative: n must be >= 1");
    std::vector<double> xs(n);
    for (auto& x : xs) x = sample_alternative_one(spec, rng);
    return Sample(std::move(xs));
}

}  // namespace paretogof
