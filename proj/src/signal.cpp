// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 vobf contributors

#include "vobf/signal.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace vobf {

namespace {

constexpr double kStabilityMargin = 1e-10;
constexpr double kTwoPi = 6.283185307179586476925286766559;

// Largest root modulus of the monic polynomial 1 + a1 z^-1 + ... + aq z^-q,
// i.e. of z^q + a1 z^{q-1} + ... + aq, via the companion matrix.
double max_root_modulus(const std::vector<double>& den) {
    const int q = static_cast<int>(den.size()) - 1;
    if (q <= 0) return 0.0;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(q, q);
    for (int i = 0; i < q; ++i) companion(0, i) = -den[static_cast<std::size_t>(i + 1)];
    for (int i = 1; i < q; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
    double r = 0.0;
    for (int i = 0; i < q; ++i) r = std::max(r, std::abs(es.eigenvalues()[i]));
    return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97f4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

bool all_finite(const Signal& s) {
    for (double v : s) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

RationalFilter::RationalFilter(std::vector<double> num, std::vector<double> den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.empty() || den_.empty()) throw std::invalid_argument("RationalFilter: empty coefficient list");
    if (den_[0] != 1.0) throw std::invalid_argument("RationalFilter: denominator must be monic (leading coefficient 1)");
    for (double v : num_) {
        if (!std::isfinite(v)) throw std::invalid_argument("RationalFilter: non-finite numerator coefficient");
    }
    for (double v : den_) {
        if (!std::isfinite(v)) throw std::invalid_argument("RationalFilter: non-finite denominator coefficient");
    }
    max_pole_modulus_ = max_root_modulus(den_);
    if (max_pole_modulus_ > 1.0 - kStabilityMargin) {
        throw std::invalid_argument("RationalFilter: unstable denominator (pole modulus " +
                                    std::to_string(max_pole_modulus_) + ")");
    }
}

Signal RationalFilter::apply(const Signal& u) const {
    const std::size_t n = u.size();
    Signal y(n, 0.0);
    const std::size_t p = num_.size();
    const std::size_t q = den_.size();
    for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < p && i <= k; ++i) acc += num_[i] * u[k - i];
        for (std::size_t j = 1; j < q && j <= k; ++j) acc -= den_[j] * y[k - j];
        y[k] = acc;
    }
    return y;
}

Signal RationalFilter::impulse_response(int length) const {
    Signal impulse(static_cast<std::size_t>(length), 0.0);
    if (length > 0) impulse[0] = 1.0;
    return apply(impulse);
}

GaussianSampler::GaussianSampler(std::uint64_t seed) : engine_(seed) {}

double GaussianSampler::uniform() {
    // 53-bit mantissa in [0, 1); pinned mapping so streams are portable.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianSampler::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    has_spare_ = true;
    return r * std::cos(kTwoPi * u2);
}

Signal gaussian_signal(std::uint64_t seed, std::size_t length) {
    GaussianSampler g(seed);
    Signal s(length);
    for (auto& v : s) v = g.next();
    return s;
}

std::uint64_t seed_mix(std::uint64_t seed, std::uint64_t value) {
    return splitmix64(seed ^ splitmix64(value));
}

std::uint64_t seed_mix(std::uint64_t seed, const std::string& tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the tag bytes
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return seed_mix(seed, h);
}

WienerSystem::WienerSystem(std::vector<double> den, std::vector<double> gains, double noise_variance)
    : den_(std::move(den)), gains_(std::move(gains)), noise_variance_(noise_variance) {
    if (gains_.empty()) throw std::invalid_argument("WienerSystem: at least one branch gain required (M >= 1)");
    if (noise_variance_ < 0.0) throw std::invalid_argument("WienerSystem: noise variance must be >= 0");
    RationalFilter check({1.0}, den_);  // validates monic + stable
}

void WienerSystem::set_noise_variance(double v) {
    if (v < 0.0) throw std::invalid_argument("WienerSystem: noise variance must be >= 0");
    noise_variance_ = v;
}

RationalFilter WienerSystem::branch(int order) const {
    if (order < 1 || order > max_order()) throw std::invalid_argument("WienerSystem: branch order out of range");
    return RationalFilter({0.0, gains_[static_cast<std::size_t>(order - 1)]}, den_);
}

Signal WienerSystem::simulate_noise_free(const Signal& u) const {
    if (!all_finite(u)) throw std::invalid_argument("WienerSystem: input contains non-finite samples");
    Signal y0(u.size(), 0.0);
    for (int m = 1; m <= max_order(); ++m) {
        const Signal x = branch(m).apply(u);
        for (std::size_t k = 0; k < u.size(); ++k) {
            double t = 1.0;
            for (int j = 0; j < m; ++j) t *= x[k];
            y0[k] += t;
        }
    }
    return y0;
}

std::pair<Signal, Signal> WienerSystem::simulate(const Signal& u, std::uint64_t noise_seed) const {
    Signal y0 = simulate_noise_free(u);
    Signal y = y0;
    if (noise_variance_ > 0.0) {
        GaussianSampler g(noise_seed);
        const double sd = std::sqrt(noise_variance_);
        for (auto& v : y) v += sd * g.next();
    }
    return {std::move(y), std::move(y0)};
}

std::vector<SymmetricKernel> WienerSystem::true_kernels(int memory) const {
    if (memory < 1) throw std::invalid_argument("WienerSystem: memory must be >= 1");
    std::vector<SymmetricKernel> out;
    for (int m = 1; m <= max_order(); ++m) {
        const Signal g = branch(m).impulse_response(memory);
        SymmetricKernel h(m, memory);
        const auto idx = enumerate_indices(m, memory);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            double v = 1.0;
            for (int j = 0; j < m; ++j) v *= g[static_cast<std::size_t>(idx[i][static_cast<std::size_t>(j)])];
            h.values[i] = v;
        }
        out.push_back(std::move(h));
    }
    return out;
}

double rms(const Signal& s) {
    if (s.empty()) throw std::invalid_argument("rms: empty signal");
    double acc = 0.0;
    for (double v : s) acc += v * v;
    return std::sqrt(acc / static_cast<double>(s.size()));
}

double nrms(const Signal& y_val, const Signal& y_mod) {
    if (y_val.size() != y_mod.size()) throw std::invalid_argument("nrms: signals must have equal length");
    const double denom = rms(y_val);
    if (denom <= 0.0) throw std::invalid_argument("nrms: rms(y_val) is zero, metric undefined");
    Signal diff(y_val.size());
    for (std::size_t k = 0; k < y_val.size(); ++k) diff[k] = y_val[k] - y_mod[k];
    return rms(diff) / denom;
}

}  // namespace vobf
