#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "paretogof/errors.hpp"
#include "paretogof/power_study.hpp"

using namespace paretogof;

namespace {

constexpr const char* kSmall = R"(# two rows
tests        = KS, S2
alternatives = P(2), W(1.5)
sample_sizes = 20
mc           = 1000
alpha        = 0.05
seed         = 42
)";

std::string csv(const PowerTable& t) {
    std::ostringstream out;
    write_power_csv(t, out);
    return out.str();
}

std::string field_of(const std::string& text) {
    try {
        parse_power_config(text);
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "";
}

}  // namespace

TEST_CASE("config parsing") {
    const auto cfg = parse_power_config(kSmall);
    REQUIRE(cfg.tests.size() == 2);
    CHECK(cfg.tests[0].id == TestId::KS);
    CHECK(cfg.tests[1].name() == "S2_3_2");
    REQUIRE(cfg.alternatives.size() == 2);
    CHECK(cfg.alternatives[1] == AlternativeSpec{Family::Weibull, 1.5});
    CHECK(cfg.sample_sizes == std::vector<std::size_t>{20});
    CHECK(cfg.mc == 1000);
    CHECK(cfg.seed == 42);
    CHECK(cfg.refit);

    const auto all = parse_power_config(
        "tests = all\nalternatives = LNMix(0.9)\nsample_sizes = 20, 30\nmc = 500\nalpha = 0.1\nseed = 1\nm = 4\na = 1.5\nmellin_a = 2\nrefit = "
        "false\n");
    CHECK(all.tests.size() == 9);
    CHECK(all.tests[6].m == 4);
    CHECK(all.tests[6].a == 1.5);
    CHECK(all.tests[4].mellin_a == 2.0);
    CHECK_FALSE(all.refit);
}

TEST_CASE("config errors name the field") {
    CHECK(field_of("tests = KS\nalternatives = Foo(1)\nsample_sizes = 20\nmc = 1000\nalpha = 0.05\nseed = 1\n") == "alternatives");
    CHECK(field_of("tests = KS\nalternatives = P(2)\nsample_sizes = 20\nmc = 1000\nalpha = 0.05\nseed = 1\ncolour = red\n") == "colour");
    CHECK(field_of("tests = KS\nalternatives = P(2)\nsample_sizes = 20\nalpha = 0.05\nseed = 1\n") == "mc");
    CHECK(field_of("tests = XX\nalternatives = P(2)\nsample_sizes = 20\nmc = 1000\nalpha = 0.05\nseed = 1\n") == "tests");
    CHECK(field_of("tests = KS\nalternatives = P(2)\nsample_sizes = 20\nmc = 1000\nalpha = 2\nseed = 1\n") == "alpha");
    CHECK(field_of("tests = KS\ntests = AD\nalternatives = P(2)\nsample_sizes = 20\nmc = 1000\nalpha = 0.05\nseed = 1\n") == "tests");
    CHECK(field_of("tests = KS\nalternatives = P(2)\nsample_sizes = 20x\nmc = 1000\nalpha = 0.05\nseed = 1\n") == "sample_sizes");
    try {
        parse_power_config("tests = KS\nalternatives = Foo(1)\nsample_sizes = 20\nmc = 1000\nalpha = 0.05\nseed = 1\n");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("Foo") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_power_config("tests KS\n"), ParseError);
}

TEST_CASE("rounded_percent rounds halves up") {
    CHECK(rounded_percent(0, 1000) == 0);
    CHECK(rounded_percent(1000, 1000) == 100);
    CHECK(rounded_percent(45, 1000) == 5);   // 4.5
    CHECK(rounded_percent(44, 1000) == 4);   // 4.4
    CHECK(rounded_percent(125, 200) == 63);  // 62.5
    CHECK(rounded_percent(9749, 10000) == 97);
    CHECK(rounded_percent(9750, 10000) == 98);
}

TEST_CASE("fnv1a64 reference values") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("a single-cell study") {
    PowerStudyConfig cfg;
    cfg.tests = {TestStatistic{TestId::CvM}};
    cfg.alternatives = {{Family::Gamma, 1.0}};
    cfg.sample_sizes = {20};
    cfg.mc = 1000;
    const auto table = run_power_study(cfg);
    REQUIRE(table.cells.size() == 1);
    const auto& c = table.at(0, 0, 0);
    const double p = c.estimate.rejection_rate;
    CHECK(c.se == doctest::Approx(std::sqrt(p * (1 - p) / 1000)).epsilon(1e-12));
    CHECK(c.percent == rounded_percent(static_cast<std::size_t>(std::llround(p * 1000)), 1000));
    CHECK(c.top_two);
    CHECK(table.warnings.empty());
    CHECK(csv(table).rfind("alternative,n,test,power,se,mc\nGamma(1),20,CvM,", 0) == 0);
}

TEST_CASE("low mc warns") {
    PowerStudyConfig cfg;
    cfg.tests = {TestStatistic{TestId::KS}};
    cfg.alternatives = {{Family::Pareto, 2.0}};
    cfg.sample_sizes = {10};
    cfg.mc = 200;
    CHECK(run_power_study(cfg).warnings.size() == 1);
}

TEST_CASE("study reproduces and matches per-cell warp-speed runs") {
    auto cfg = parse_power_config(kSmall);
    cfg.workers = 1;
    const auto a = run_power_study(cfg);
    cfg.workers = 3;
    const auto b = run_power_study(cfg);
    CHECK(csv(a) == csv(b));

    // Every test in a row sees the same replications: each cell equals a
    // one-test run on the same (alternative, n) streams.
    BootstrapConfig boot;
    boot.B = cfg.mc;
    boot.seed = cfg.seed;
    for (std::size_t ai = 0; ai < 2; ++ai)
        for (std::size_t t = 0; t < 2; ++t) {
            const auto one = warp_speed_power(cfg.alternatives[ai], 20, cfg.tests[t], boot, CellKey{ai, 0});
            CHECK(a.at(ai, 0, t).estimate.rejection_rate == one.rejection_rate);
            CHECK(a.at(ai, 0, t).estimate.critical_value == one.critical_value);
        }
}

TEST_CASE("cells do not depend on their neighbours") {
    auto cfg = parse_power_config(kSmall);
    const auto full = run_power_study(cfg);
    cfg.tests = {cfg.tests[1]};
    const auto part = run_power_study(cfg);
    CHECK(part.at(1, 0, 0).estimate.rejection_rate == full.at(1, 0, 1).estimate.rejection_rate);
}

TEST_CASE("top-two marking with ties, and failed cells") {
    PowerStudyConfig cfg;
    TestStatistic big_m{TestId::S2};
    big_m.m = 8;
    cfg.tests = {TestStatistic{TestId::KS}, TestStatistic{TestId::AD}, TestStatistic{TestId::S1}, big_m};
    cfg.alternatives = {{Family::Weibull, 1.5}};
    cfg.sample_sizes = {6};
    cfg.mc = 1000;
    const auto table = run_power_study(cfg);
    const auto& failed = table.at(0, 0, 3);
    CHECK(failed.failed);
    CHECK_FALSE(failed.top_two);
    CHECK(csv(table).find("S2_8_2,NA,NA,1000") != std::string::npos);

    std::vector<int> pct;
    for (std::size_t t = 0; t < 3; ++t) pct.push_back(table.at(0, 0, t).percent);
    std::vector<int> sorted = pct;
    std::sort(sorted.rbegin(), sorted.rend());
    for (std::size_t t = 0; t < 3; ++t) CHECK(table.at(0, 0, t).top_two == (pct[t] >= sorted[1]));

    std::ostringstream pretty;
    write_power_pretty(table, pretty);
    CHECK(pretty.str().find("NA") != std::string::npos);
    CHECK(pretty.str().find('*') != std::string::npos);
}

TEST_CASE("the null row of a study stays near alpha") {
    PowerStudyConfig cfg;
    for (auto id : kAllTests) cfg.tests.push_back(TestStatistic{id});
    cfg.alternatives = {{Family::Pareto, 5.0}};
    cfg.sample_sizes = {30};
    cfg.mc = 10000;
    cfg.seed = 8;
    const auto table = run_power_study(cfg);
    for (const auto& c : table.cells) {
        CAPTURE(cfg.tests[c.test].name());
        CHECK(c.estimate.rejection_rate >= 0.035);
        CHECK(c.estimate.rejection_rate <= 0.065);
    }
}
