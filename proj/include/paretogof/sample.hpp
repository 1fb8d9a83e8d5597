#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "paretogof/errors.hpp"

namespace paretogof {

/// Observations together with their ascending order statistics.
class Sample {
public:
    Sample() = default;

    explicit Sample(std::vector<double> values) : values_(std::move(values)), sorted_(values_) {
        for (double v : values_)
            if (!std::isfinite(v)) throw DomainError("sample contains a non-finite value");
        std::sort(sorted_.begin(), sorted_.end());
    }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    std::span<const double> values() const noexcept { return values_; }
    std::span<const double> sorted() const noexcept { return sorted_; }

    double mean() const {
        // Summing the sorted values keeps the mean exactly permutation invariant.
        return std::accumulate(sorted_.begin(), sorted_.end(), 0.0) / static_cast<double>(size());
    }

    double min() const { return sorted_.front(); }
    double max() const { return sorted_.back(); }

private:
    std::vector<double> values_;
    std::vector<double> sorted_;
};

}  // namespace paretogof
