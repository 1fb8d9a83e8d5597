#include "paretogof/statistic.hpp"

#include <cctype>
#include <fmt/format.h>

#include "paretogof/classical_tests.hpp"
#include "paretogof/errors.hpp"

namespace paretogof {

namespace {

constexpr std::array<std::string_view, 9> kNames{"KS", "CvM", "AD", "ZA", "G", "S1", "S2", "T1", "T2"};

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i]))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view test_name(TestId id) { return kNames[static_cast<std::size_t>(id)]; }

TestId parse_test_id(std::string_view text) {
    const auto t = trim(text);
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (iequals(t, kNames[i])) return kAllTests[i];
    if (iequals(t, "CV") || iequals(t, "CM")) return TestId::CvM;
    throw ConfigError("tests", fmt::format("unknown test '{}'", t));
}

std::vector<TestStatistic> parse_test_list(std::string_view text, int m, double a, double mellin_a) {
    std::vector<TestStatistic> out;
    auto make = [&](TestId id) { return TestStatistic{id, m, a, mellin_a}; };
    if (iequals(trim(text), "all")) {
        for (TestId id : kAllTests) out.push_back(make(id));
        return out;
    }
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        if (item.empty()) throw ConfigError("tests", "empty test name in list");
        out.push_back(make(parse_test_id(item)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (out.empty()) throw ConfigError("tests", "no tests given");
    return out;
}

bool TestStatistic::uses_shape() const noexcept {
    switch (id) {
        case TestId::KS:
        case TestId::CvM:
        case TestId::AD:
        case TestId::ZA:
        case TestId::G:
            return true;
        default:
            return false;
    }
}

std::string TestStatistic::name() const {
    if (uses_shape()) return std::string(test_name(id));
    return fmt::format("{}_{}_{:g}", test_name(id), m, a);
}

EcfTestConfig TestStatistic::ecf_config() const {
    EcfTestConfig cfg;
    cfg.m = m;
    cfg.a = a;
    cfg.kernel = (id == TestId::S1 || id == TestId::T1) ? WeightKernel::Laplace : WeightKernel::Gaussian;
    cfg.family = (id == TestId::S1 || id == TestId::S2) ? EcfFamily::V : EcfFamily::U;
    return cfg;
}

double evaluate(const TestStatistic& stat, const Sample& s, std::optional<ParetoParams> shape) {
    if (!stat.uses_shape()) return ecf_statistic(s, stat.ecf_config());

    const ParetoParams p = shape ? *shape : mom_estimate(s);
    switch (stat.id) {
        case TestId::KS:
            return edf_tests(s, p).ks;
        case TestId::CvM:
            return edf_tests(s, p).cvm;
        case TestId::AD:
            return edf_tests(s, p).ad;
        case TestId::ZA:
            return zhang_za(s, p);
        case TestId::G:
            return meintanis_g(s, p, MellinWeight(stat.mellin_a));
        default:
            break;
    }
    throw DomainError("unhandled statistic");
}

}  // namespace paretogof
