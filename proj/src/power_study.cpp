#include "paretogof/power_study.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "paretogof/errors.hpp"

namespace paretogof {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_list(std::string_view v) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = v.find(',');
        const auto item = trim(v.substr(0, comma));
        if (!item.empty()) out.push_back(item);
        if (comma == std::string_view::npos) break;
        v.remove_prefix(comma + 1);
    }
    return out;
}

template <class T>
T parse_number(std::string_view field, std::string_view v) {
    T out{};
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) throw ConfigError(std::string(field), fmt::format("invalid value '{}'", v));
    return out;
}

bool parse_bool(std::string_view field, std::string_view v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(std::string(field), fmt::format("expected true/false, got '{}'", v));
}

}  // namespace

void PowerStudyConfig::validate() const {
    if (tests.empty()) throw ConfigError("tests", "at least one test is required");
    if (alternatives.empty()) throw ConfigError("alternatives", "at least one alternative is required");
    if (sample_sizes.empty()) throw ConfigError("sample_sizes", "at least one sample size is required");
    for (auto n : sample_sizes)
        if (n < 2) throw ConfigError("sample_sizes", "sample sizes must be >= 2");
    if (mc < 100) throw ConfigError("mc", "at least 100 replications are required");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha", "must lie in (0, 1)");
}

PowerStudyConfig parse_power_config(std::string_view text) {
    std::map<std::string, std::string, std::less<>> kv;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, fmt::format("expected key = value, got '{}'", line));
        const std::string key(trim(line.substr(0, eq)));
        if (kv.contains(key)) throw ConfigError(key, "given more than once");
        kv.emplace(key, std::string(trim(line.substr(eq + 1))));
    }

    static constexpr std::array<std::string_view, 10> kKnown{"tests", "alternatives", "sample_sizes", "mc", "alpha",
                                                             "seed",  "m",            "a",            "mellin_a", "refit"};
    for (const auto& [key, value] : kv)
        if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) throw ConfigError(key, "unknown field");

    auto required = [&](std::string_view key) -> const std::string& {
        const auto it = kv.find(key);
        if (it == kv.end()) throw ConfigError(std::string(key), "missing required field");
        return it->second;
    };

    PowerStudyConfig cfg;
    const int m = kv.contains("m") ? parse_number<int>("m", kv.find("m")->second) : 3;
    const double a = kv.contains("a") ? parse_number<double>("a", kv.find("a")->second) : 2.0;
    const double mellin_a = kv.contains("mellin_a") ? parse_number<double>("mellin_a", kv.find("mellin_a")->second) : kDefaultMellinA;
    if (m < 2) throw ConfigError("m", "must be >= 2");
    if (!(a > 0.0)) throw ConfigError("a", "must be positive");
    if (!(mellin_a > 0.0)) throw ConfigError("mellin_a", "must be positive");

    cfg.tests = parse_test_list(required("tests"), m, a, mellin_a);
    for (auto item : split_list(required("alternatives"))) cfg.alternatives.push_back(parse_alternative(item));
    for (auto item : split_list(required("sample_sizes"))) cfg.sample_sizes.push_back(parse_number<std::size_t>("sample_sizes", item));
    cfg.mc = parse_number<std::size_t>("mc", required("mc"));
    cfg.alpha = parse_number<double>("alpha", required("alpha"));
    cfg.seed = parse_number<std::uint64_t>("seed", required("seed"));
    if (kv.contains("refit")) cfg.refit = parse_bool("refit", kv.find("refit")->second);
    cfg.validate();
    return cfg;
}

PowerStudyConfig load_power_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(fmt::format("cannot open config '{}'", path));
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_power_config(buf.str());
}

const PowerCell& PowerTable::at(std::size_t alt, std::size_t n_index, std::size_t test) const {
    const std::size_t row = alt * config.sample_sizes.size() + n_index;
    return cells.at(row * config.tests.size() + test);
}

int rounded_percent(std::size_t rejections, std::size_t mc) {
    return static_cast<int>((200 * rejections + mc) / (2 * mc));
}

PowerTable run_power_study(const PowerStudyConfig& cfg) {
    cfg.validate();
    PowerTable table;
    table.config = cfg;
    if (cfg.mc < 1000) table.warnings.push_back(fmt::format("mc = {} is below 1000; estimates are coarse", cfg.mc));

    BootstrapConfig boot;
    boot.B = cfg.mc;
    boot.alpha = cfg.alpha;
    boot.seed = cfg.seed;
    boot.refit = cfg.refit;
    boot.workers = cfg.workers;

    const std::size_t k = cfg.tests.size();
    for (std::size_t ai = 0; ai < cfg.alternatives.size(); ++ai) {
        for (std::size_t ni = 0; ni < cfg.sample_sizes.size(); ++ni) {
            const std::size_t n = cfg.sample_sizes[ni];
            std::vector<PowerCell> row(k);
            for (std::size_t t = 0; t < k; ++t) row[t] = PowerCell{ai, n, t, {}, 0.0, 0, false, false, {}};

            // Tests whose block order exceeds n cannot be evaluated; the rest
            // still share one set of replications.
            std::vector<TestStatistic> runnable;
            std::vector<std::size_t> where;
            for (std::size_t t = 0; t < k; ++t) {
                const auto& st = cfg.tests[t];
                if (!st.uses_shape() && static_cast<std::size_t>(st.m) > n) {
                    row[t].failed = true;
                    row[t].error = "block order m exceeds n";
                } else {
                    runnable.push_back(st);
                    where.push_back(t);
                }
            }
            if (!runnable.empty()) {
                try {
                    const auto est = warp_speed_batch(cfg.alternatives[ai], n, runnable, boot, CellKey{ai, ni});
                    for (std::size_t i = 0; i < est.size(); ++i) {
                        auto& c = row[where[i]];
                        c.estimate = est[i];
                        const double p = est[i].rejection_rate;
                        c.se = std::sqrt(p * (1.0 - p) / static_cast<double>(est[i].mc));
                        const auto rejections = static_cast<std::size_t>(std::llround(p * static_cast<double>(est[i].mc)));
                        c.percent = rounded_percent(rejections, est[i].mc);
                    }
                } catch (const std::exception& e) {
                    for (auto t : where) {
                        row[t].failed = true;
                        row[t].error = e.what();
                    }
                }
            }

            // Top two per row, ties included: everything at or above the
            // second-largest rounded value.
            std::vector<int> ok;
            for (const auto& c : row)
                if (!c.failed) ok.push_back(c.percent);
            if (!ok.empty()) {
                std::sort(ok.rbegin(), ok.rend());
                const int threshold = ok.size() > 1 ? ok[1] : ok[0];
                for (auto& c : row)
                    if (!c.failed && c.percent >= threshold) c.top_two = true;
            }
            table.cells.insert(table.cells.end(), row.begin(), row.end());
        }
    }
    return table;
}

void write_power_csv(const PowerTable& table, std::ostream& out) {
    out << "alternative,n,test,power,se,mc\n";
    for (const auto& c : table.cells) {
        const auto& alt = table.config.alternatives[c.alternative];
        const auto name = table.config.tests[c.test].name();
        if (c.failed)
            out << fmt::format("{},{},{},NA,NA,{}\n", alt.label(), c.n, name, table.config.mc);
        else
            out << fmt::format("{},{},{},{:.4f},{:.4f},{}\n", alt.label(), c.n, name, c.estimate.rejection_rate, c.se, c.estimate.mc);
    }
}

void write_power_pretty(const PowerTable& table, std::ostream& out) {
    const auto& cfg = table.config;
    out << fmt::format("{:<14}{:>5}", "alternative", "n");
    for (const auto& t : cfg.tests) out << fmt::format("{:>10}", t.name());
    out << '\n';
    const std::size_t k = cfg.tests.size();
    for (std::size_t row = 0; row * k < table.cells.size(); ++row) {
        const auto& first = table.cells[row * k];
        out << fmt::format("{:<14}{:>5}", cfg.alternatives[first.alternative].label(), first.n);
        for (std::size_t t = 0; t < k; ++t) {
            const auto& c = table.cells[row * k + t];
            if (c.failed)
                out << fmt::format("{:>10}", "NA");
            else
                out << fmt::format("{:>10}", fmt::format("{}{}", c.percent, c.top_two ? "*" : ""));
        }
        out << '\n';
    }
    out << fmt::format("mc = {}, alpha = {:g}, seed = {}; * marks the two highest powers per row\n", cfg.mc, cfg.alpha, cfg.seed);
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace paretogof
