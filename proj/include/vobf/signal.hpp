// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 vobf contributors

#ifndef VOBF_SIGNAL_HPP
#define VOBF_SIGNAL_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vobf/kernel.hpp"

namespace vobf {

bool all_finite(const Signal& s);

/// Discrete rational filter num(q^-1)/den(q^-1), realized as the direct-form
/// difference equation with zero initial conditions. The denominator must be
/// monic and all its roots strictly inside the unit circle.
class RationalFilter {
public:
    RationalFilter(std::vector<double> num, std::vector<double> den);

    Signal apply(const Signal& u) const;
    Signal impulse_response(int length) const;
    double max_pole_modulus() const { return max_pole_modulus_; }
    const std::vector<double>& num() const { return num_; }
    const std::vector<double>& den() const { return den_; }

private:
    std::vector<double> num_;
    std::vector<double> den_;
    double max_pole_modulus_ = 0.0;
};

/// Seedable Gaussian stream: mt19937_64 driving a Box-Muller transform.
/// The generator name is recorded in run metadata for reproducibility.
class GaussianSampler {
public:
    static constexpr const char* kName = "mt19937_64/box-muller";

    explicit GaussianSampler(std::uint64_t seed);
    double next();

private:
    double uniform();

    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

Signal gaussian_signal(std::uint64_t seed, std::size_t length);

/// Hash-combine for deriving per-cell and per-purpose seeds (splitmix64).
std::uint64_t seed_mix(std::uint64_t seed, std::uint64_t value);
std::uint64_t seed_mix(std::uint64_t seed, const std::string& tag);

/// Static-nonlinearity Wiener cascade: y0(k) = sum_m (gain_m q^-1/A(q) u)(k)^m.
class WienerSystem {
public:
    WienerSystem(std::vector<double> den, std::vector<double> gains, double noise_variance);

    int max_order() const { return static_cast<int>(gains_.size()); }
    double noise_variance() const { return noise_variance_; }
    void set_noise_variance(double v);
    const std::vector<double>& den() const { return den_; }
    const std::vector<double>& gains() const { return gains_; }

    RationalFilter branch(int order) const;

    /// Returns (y, y0): measured output with seeded Gaussian noise and the
    /// noise-free output.
    std::pair<Signal, Signal> simulate(const Signal& u, std::uint64_t noise_seed) const;
    Signal simulate_noise_free(const Signal& u) const;

    /// Ground-truth kernels h_m(tau_1..tau_m) = prod_j g_m(tau_j), with g_m
    /// the branch impulse response truncated to `memory` samples.
    std::vector<SymmetricKernel> true_kernels(int memory) const;

private:
    std::vector<double> den_;
    std::vector<double> gains_;
    double noise_variance_ = 0.0;
};

double rms(const Signal& s);

/// Normalised RMS error rms(y_val - y_mod) / rms(y_val).
double nrms(const Signal& y_val, const Signal& y_mod);

struct Dataset {
    Signal u;
    Signal y;
    std::optional<double> noise_variance;
};

}  // namespace vobf

#endif
