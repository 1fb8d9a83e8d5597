#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "paretogof/bootstrap.hpp"
#include "paretogof/dataset.hpp"
#include "paretogof/golfer.hpp"
#include "paretogof/power_study.hpp"
#include "paretogof/report.hpp"
#include "paretogof/statistic.hpp"

using namespace paretogof;

namespace {

struct TestOptions {
    std::string file;
    bool golfer = false;
    std::string tests = "all";
    int m = 3;
    double a = 2.0;
    double mellin_a = kDefaultMellinA;
    std::size_t B = 10000;
    double alpha = 0.05;
    std::uint64_t seed = 20240101;
    std::optional<double> threshold;
    bool refit = true;
    std::string format = "pretty";
};

int cmd_test(const TestOptions& o) {
    std::vector<double> values;
    if (o.golfer) {
        for (double v : kGolferEarnings) values.push_back(v / o.threshold.value_or(kGolferThreshold));
    } else {
        values = read_dataset(o.file, o.threshold);
    }
    const Sample s(values);
    const auto stats = parse_test_list(o.tests, o.m, o.a, o.mellin_a);
    BootstrapConfig cfg;
    cfg.B = o.B;
    cfg.alpha = o.alpha;
    cfg.seed = o.seed;
    cfg.refit = o.refit;
    const auto reports = pvalues(s, stats, cfg);
    write_reports(reports, o.alpha, s.size(), parse_report_format(o.format), std::cout);
    return 0;
}

int cmd_power(const std::string& path, const std::string& format, const std::string& output) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(fmt::format("cannot open config '{}'", path));
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto cfg = parse_power_config(text);
    std::cerr << fmt::format("# config {} fnv1a64 {:016x}\n", path, fnv1a64(text));

    const auto table = run_power_study(cfg);
    for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';

    std::ofstream file;
    if (!output.empty()) {
        file.open(output, std::ios::binary);
        if (!file) throw std::runtime_error(fmt::format("cannot write '{}'", output));
    }
    std::ostream& out = output.empty() ? std::cout : file;
    if (format == "csv")
        write_power_csv(table, out);
    else if (format == "pretty")
        write_power_pretty(table, out);
    else
        throw ConfigError("format", fmt::format("unknown format '{}', expected csv or pretty", format));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goodness-of-fit tests for the Pareto type I distribution"};
    app.require_subcommand(1);

    TestOptions topt;
    auto* test = app.add_subcommand("test", "Test a dataset against the Pareto family with bootstrap p-values");
    auto* file_opt = test->add_option("file", topt.file, "Data file: one value per line, '#' comments")->check(CLI::ExistingFile);
    auto* golfer_flag = test->add_flag("--golfer", topt.golfer, "Use the built-in golfer earnings data (threshold 700 unless given)");
    file_opt->excludes(golfer_flag);
    test->add_option("--tests", topt.tests, "Comma list of KS,CvM,AD,ZA,G,S1,S2,T1,T2 or 'all'")->capture_default_str();
    test->add_option("--m", topt.m, "Block order of the characteristic-function tests")->capture_default_str()->check(CLI::Range(2, 1000));
    test->add_option("--a", topt.a, "Kernel parameter of the characteristic-function tests")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    test->add_option("--mellin-a", topt.mellin_a, "Decay rate of the Mellin weight for G")->capture_default_str()->check(CLI::PositiveNumber);
    test->add_option("--B", topt.B, "Bootstrap samples")->capture_default_str()->check(CLI::Range(std::size_t{100}, std::size_t{100000000}));
    test->add_option("--alpha", topt.alpha, "Significance level")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    test->add_option("--seed", topt.seed, "Random seed")->capture_default_str();
    test->add_option("--threshold", topt.threshold, "Divide every value by this before testing")->check(CLI::PositiveNumber);
    test->add_flag("--refit,!--no-refit", topt.refit, "Re-estimate the shape on each bootstrap sample (default) or hold it fixed");
    test->add_option("--format", topt.format, "Output format")->capture_default_str()->check(CLI::IsMember({"csv", "pretty", "json"}));

    std::string power_config, power_format = "csv", power_output;
    auto* power = app.add_subcommand("power", "Run a warp-speed bootstrap power study from a config file");
    power->add_option("config", power_config, "Study config (key = value)")->required()->check(CLI::ExistingFile);
    power->add_option("--format", power_format, "Output format")->capture_default_str()->check(CLI::IsMember({"csv", "pretty"}));
    power->add_option("-o,--output", power_output, "Write to this file instead of stdout");

    std::size_t golfer_B = 10000;
    std::uint64_t golfer_seed = 20240101;
    double golfer_mellin_a = kDefaultMellinA;
    auto* golfer = app.add_subcommand("golfer", "Reproduce the golfer earnings analysis and compare with reference values");
    golfer->add_option("--B", golfer_B, "Bootstrap samples")->capture_default_str()->check(CLI::Range(std::size_t{100}, std::size_t{100000000}));
    golfer->add_option("--seed", golfer_seed, "Random seed")->capture_default_str();
    golfer->add_option("--mellin-a", golfer_mellin_a, "Decay rate of the Mellin weight for G")->capture_default_str()->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*test) {
            if (topt.file.empty() && !topt.golfer) throw CLI::RequiredError("file or --golfer");
            return cmd_test(topt);
        }
        if (*power) return cmd_power(power_config, power_format, power_output);
        if (*golfer) {
            write_golfer_report(run_golfer(golfer_B, golfer_seed, golfer_mellin_a), std::cout);
            return 0;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
