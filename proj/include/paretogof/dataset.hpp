#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paretogof/sample.hpp"

namespace paretogof {

/// Plain-text data: one decimal number per line; blank lines and lines whose
/// first non-blank character is '#' are ignored. Values are divided by
/// `threshold` when one is given and must then all be >= 1.
std::vector<double> parse_dataset(std::string_view text, std::optional<double> threshold = std::nullopt);
std::vector<double> read_dataset(const std::string& path, std::optional<double> threshold = std::nullopt);
void write_dataset(std::span<const double> values, std::ostream& out);

/// Lifetime tournament earnings (thousands of dollars, through 1980) of the
/// 50 professional golfers who earned more than $700,000.
inline constexpr std::array<double, 50> kGolferEarnings{
    708,  712,  729,  746,  753,  759,  769,  771,  778,  778,  814,  816,  820,  825,  841,  844,  849,
    871,  878,  883,  912,  944,  965,  1001, 1005, 1016, 1031, 1051, 1056, 1066, 1092, 1095, 1109, 1171,
    1184, 1208, 1338, 1374, 1410, 1433, 1519, 1537, 1627, 1684, 1690, 1829, 1858, 2202, 2474, 3581,
};
inline constexpr double kGolferThreshold = 700.0;

/// Golfer earnings divided by the $700k threshold.
Sample golfer_sample();

}  // namespace paretogof
