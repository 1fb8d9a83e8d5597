#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paretogof/distributions.hpp"
#include "paretogof/ecf_tests.hpp"
#include "paretogof/sample.hpp"

namespace paretogof {

enum class TestId { KS, CvM, AD, ZA, G, S1, S2, T1, T2 };

inline constexpr std::array kAllTests{TestId::KS, TestId::CvM, TestId::AD, TestId::ZA, TestId::G,
                                      TestId::S1, TestId::S2,  TestId::T1, TestId::T2};

// Mellin decay for G.
inline constexpr double kDefaultMellinA = 1.0;

/// One of the nine tests together with its tuning parameters. m and a apply
/// to the characteristic-function tests, mellin_a to G.
struct TestStatistic {
    TestId id = TestId::S2;
    int m = 3;
    double a = 2.0;
    double mellin_a = kDefaultMellinA;

    bool uses_shape() const noexcept;  // false for the S/T family
    std::string name() const;
    EcfTestConfig ecf_config() const;
};

std::string_view test_name(TestId id);
TestId parse_test_id(std::string_view text);

/// Builds a test list from comma-separated names ("all" for the battery).
std::vector<TestStatistic> parse_test_list(std::string_view text, int m, double a, double mellin_a);

/// Evaluates the statistic. Shape-based tests use `shape` if given, else the
/// method-of-moments fit of `s`.
double evaluate(const TestStatistic& stat, const Sample& s, std::optional<ParetoParams> shape = std::nullopt);

}  // namespace paretogof
