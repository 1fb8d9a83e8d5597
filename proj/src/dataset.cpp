#include "paretogof/dataset.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
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

}  // namespace

std::vector<double> parse_dataset(std::string_view text, std::optional<double> threshold) {
    if (threshold && !(*threshold > 0.0 && std::isfinite(*threshold)))
        throw DomainError("threshold must be a positive number");
    std::vector<double> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = trim(text.substr(0, nl));
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc{} || ptr != line.data() + line.size() || !std::isfinite(v))
            throw ParseError(line_no, fmt::format("not a number: '{}'", line));
        if (threshold) v /= *threshold;
        if (!(v >= 1.0))
            throw ParseError(line_no, fmt::format("value {} is below the Pareto support [1, inf){}", line,
                                                  threshold ? " after rescaling" : ""));
        out.push_back(v);
    }
    if (out.size() < 2) throw ParseError(line_no, "dataset needs at least two observations");
    return out;
}

std::vector<double> read_dataset(const std::string& path, std::optional<double> threshold) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(fmt::format("cannot open dataset '{}'", path));
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_dataset(buf.str(), threshold);
}

void write_dataset(std::span<const double> values, std::ostream& out) {
    // Shortest round-trip representation.
    for (double v : values) out << fmt::format("{}\n", v);
}

Sample golfer_sample() {
    std::vector<double> xs;
    xs.reserve(kGolferEarnings.size());
    for (double v : kGolferEarnings) xs.push_back(v / kGolferThreshold);
    return Sample(std::move(xs));
}

}  // namespace paretogof
