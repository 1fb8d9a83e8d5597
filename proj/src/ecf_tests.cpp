#include "paretogof/ecf_tests.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "paretogof/errors.hpp"

namespace paretogof {

namespace {

void check_order(std::size_t n, int m) {
    if (m < 2) throw OrderError("block order m must be >= 2");
    if (static_cast<std::size_t>(m) > n) throw OrderError("block order m must not exceed the sample size");
}

void check_finite(const Sample& s) {
    for (double x : s.sorted())
        if (!std::isfinite(x)) throw DomainError("non-finite observation");
}

std::vector<double> roots(std::span<const double> xs, int m) {
    std::vector<double> out(xs.size());
    const double p = 1.0 / m;
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = std::pow(xs[i], p);
    return out;
}

// Kernel K(d) = integral of cos(t d) w_a(t) dt, as a functor the O(n^2)
// loops can inline.
struct LaplaceKernel {
    double a, a2;
    explicit LaplaceKernel(double a_) : a(a_), a2(a_ * a_) {}
    double operator()(double d) const { return 2.0 * a / (a2 + d * d); }
};

struct GaussianKernel {
    double scale, inv4a;
    explicit GaussianKernel(double a) : scale(std::sqrt(std::numbers::pi / a)), inv4a(1.0 / (4.0 * a)) {}
    double operator()(double d) const { return scale * std::exp(-d * d * inv4a); }
};

// Sum over j,k of K(x_j - x_k), using symmetry.
template <class K>
double self_sum(std::span<const double> x, const K& kern) {
    double off = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t k = j + 1; k < x.size(); ++k) off += kern(x[j] - x[k]);
    return 2.0 * off + static_cast<double>(x.size()) * kern(0.0);
}

// Sum over j,k of w_j w_k K(x_j - x_k) for j, k < w.size().
template <class K>
double weighted_self_sum(std::span<const double> x, std::span<const double> w, const K& kern) {
    double off = 0.0, diag = 0.0;
    const double k0 = kern(0.0);
    for (std::size_t j = 0; j < w.size(); ++j) {
        diag += w[j] * w[j] * k0;
        double row = 0.0;
        for (std::size_t k = j + 1; k < w.size(); ++k) row += w[k] * kern(x[j] - x[k]);
        off += w[j] * row;
    }
    return 2.0 * off + diag;
}

// Sum over j < w.size(), all k of w_j K(x_j - y_k).
template <class K>
double cross_sum(std::span<const double> x, std::span<const double> w, std::span<const double> y, const K& kern) {
    double total = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        double row = 0.0;
        for (double yk : y) row += kern(x[j] - yk);
        total += w[j] * row;
    }
    return total;
}

// n * integral |phi_{n,m} - chi|^2 w, where chi = sum_j w_j e^{i t X_(j)} and
// w holds the normalized weights. For V weights this is the printed
// S-statistic (the -(2 or 4) n v_j cross term and n^2 v_j v_k block after
// pulling 1/n inside); for U weights it is the printed T-statistic.
template <class K>
double distance(std::span<const double> x, std::span<const double> y, std::span<const double> w, const K& kern) {
    const double n = static_cast<double>(x.size());
    return self_sum(y, kern) / n - 2.0 * cross_sum(x, w, y, kern) + n * weighted_self_sum(x, w, kern);
}

double dispatch(const Sample& s, const EcfTestConfig& cfg, std::span<const double> w) {
    const auto x = s.sorted();
    const auto y = roots(x, cfg.m);
    if (cfg.kernel == WeightKernel::Laplace) return distance(x, y, w, LaplaceKernel(cfg.a));
    return distance(x, y, w, GaussianKernel(cfg.a));
}

}  // namespace

void EcfTestConfig::validate() const {
    if (m < 2) throw OrderError("block order m must be >= 2");
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("kernel parameter a must be positive");
}

std::vector<double> v_weights(std::size_t n, int m) {
    check_order(n, m);
    std::vector<double> v(n);
    const double nn = static_cast<double>(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const double hi = static_cast<double>(n - j + 1) / nn;
        const double lo = static_cast<double>(n - j) / nn;
        v[j - 1] = std::pow(hi, m) - std::pow(lo, m);
    }
    return v;
}

std::vector<std::uint64_t> u_weights(std::size_t n, int m) {
    check_order(n, m);
    const std::size_t len = n - static_cast<std::size_t>(m) + 1;
    std::vector<std::uint64_t> u(len);
    // C(r, m-1) for r = m-1 .. n-1, built upward: C(r+1, k) = C(r, k) (r+1) / (r+1-k).
    const std::uint64_t k = static_cast<std::uint64_t>(m - 1);
    __extension__ using u128 = unsigned __int128;
    u128 c = 1;  // C(k, k)
    for (std::uint64_t r = k;; ++r) {
        const std::size_t j = n - static_cast<std::size_t>(r);  // u_j = C(n - j, k)
        if (c > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("u_weights: coefficient exceeds 64 bits");
        u[j - 1] = static_cast<std::uint64_t>(c);
        if (j == 1) break;
        c = c * (r + 1) / (r + 1 - k);
    }
    return u;
}

std::vector<double> u_weight_ratios(std::size_t n, int m) {
    check_order(n, m);
    // u_j / C(n,m) = m/n * prod_{i=1}^{m-1} (n-j-i+1)/(n-i)
    const std::size_t len = n - static_cast<std::size_t>(m) + 1;
    std::vector<double> r(len);
    const double nn = static_cast<double>(n);
    for (std::size_t j = 1; j <= len; ++j) {
        double q = m / nn;
        for (int i = 1; i < m; ++i) q *= static_cast<double>(n - j - i + 1) / (nn - i);
        r[j - 1] = q;
    }
    return r;
}

double stat_S(const Sample& s, const EcfTestConfig& cfg) {
    cfg.validate();
    check_order(s.size(), cfg.m);
    check_finite(s);
    const auto w = v_weights(s.size(), cfg.m);
    return dispatch(s, cfg, w);
}

double stat_T(const Sample& s, const EcfTestConfig& cfg) {
    cfg.validate();
    check_order(s.size(), cfg.m);
    check_finite(s);
    const auto w = u_weight_ratios(s.size(), cfg.m);
    return dispatch(s, cfg, w);
}

double ecf_statistic(const Sample& s, const EcfTestConfig& cfg) {
    return cfg.family == EcfFamily::V ? stat_S(s, cfg) : stat_T(s, cfg);
}

std::complex<double> ecf_root(const Sample& s, int m, double t) {
    check_order(s.size(), m);
    std::complex<double> acc = 0.0;
    for (double y : roots(s.sorted(), m)) acc += std::polar(1.0, t * y);
    return acc / static_cast<double>(s.size());
}

std::complex<double> ecf_min_v(const Sample& s, int m, double t) {
    const auto w = v_weights(s.size(), m);
    const auto x = s.sorted();
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) acc += w[j] * std::polar(1.0, t * x[j]);
    return acc;
}

std::complex<double> ecf_min_u(const Sample& s, int m, double t) {
    const auto w = u_weight_ratios(s.size(), m);
    const auto x = s.sorted();
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) acc += w[j] * std::polar(1.0, t * x[j]);
    return acc;
}

std::complex<double> ecf_min_naive(const Sample& s, int m, double t, EcfFamily family) {
    const std::size_t n = s.size();
    if (n > 10 || m > 3) throw std::length_error("ecf_min_naive: enumeration limited to n <= 10, m <= 3");
    check_order(n, m);
    const auto x = s.values();

    std::complex<double> acc = 0.0;
    std::size_t count = 0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    if (family == EcfFamily::U)
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;

    for (;;) {
        double lo = x[idx[0]];
        for (std::size_t i = 1; i < idx.size(); ++i) lo = std::min(lo, x[idx[i]]);
        acc += std::polar(1.0, t * lo);
        ++count;

        // Advance the odometer (V: all tuples; U: strictly increasing tuples).
        int pos = m - 1;
        if (family == EcfFamily::V) {
            while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
            if (pos < 0) break;
        } else {
            while (pos >= 0 && idx[pos] == n - static_cast<std::size_t>(m - pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return acc / static_cast<double>(count);
}

double kernel_integral(WeightKernel kernel, double a, double b) {
    if (!(a > 0.0)) throw DomainError("kernel parameter a must be positive");
    if (kernel == WeightKernel::Laplace) return LaplaceKernel(a)(b);
    return GaussianKernel(a)(b);
}

}  // namespace paretogof
