// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 vobf contributors

#ifndef VOBF_BASIS_HPP
#define VOBF_BASIS_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "vobf/kernel.hpp"
#include "vobf/signal.hpp"

namespace vobf {

enum class BasisKind { fir, laguerre, kautz };

std::string to_string(BasisKind k);
BasisKind basis_kind_from_string(const std::string& s);

/// One kernel's orthonormal basis: FIR delays, Laguerre(a) or Kautz(b, c),
/// with B functions. Laguerre/Kautz responses are strictly proper under the
/// F(z) = sum f(tau) z^-tau convention, so f(0) = 0 for those kinds.
struct BasisSpec {
    BasisKind kind = BasisKind::fir;
    double a = 0.0;       // Laguerre pole
    double b = 0.0, c = 0.0;  // Kautz parameters
    int count = 0;        // B, number of functions

    static BasisSpec fir(int count);
    static BasisSpec laguerre(double a, int count);
    static BasisSpec kautz(double b, double c, int count);

    double pole_modulus() const;
    std::vector<double> params() const;  // {} / {a} / {b, c}
};

/// Impulse response samples f_i(0..length-1) of the i'th basis function
/// (i >= 1), computed by cascaded difference equations.
std::vector<double> laguerre_ir(double a, int i, int length);
std::vector<double> kautz_ir(double b, double c, int i, int length);

/// All B impulse responses as a (B x length) matrix, sharing the cascade.
Eigen::MatrixXd realize_ir_table(const BasisSpec& spec, int length);

/// Per-order realized bases. The stored impulse-response length satisfies
/// the tail rule: L >= max(512, 8*memory_hint), doubled until the geometric
/// decay bound puts the discarded tail energy below 1e-10.
class BasisBank {
public:
    static BasisBank realize(std::vector<BasisSpec> specs, int memory_hint);

    int num_orders() const { return static_cast<int>(specs_.size()); }
    const BasisSpec& spec(int order) const;
    const Eigen::MatrixXd& ir(int order) const;  // B x L
    int length(int order) const;

    /// Input filtered by each basis function of the given order's basis,
    /// exact recursive realization (length-preserving, zero initial state).
    std::vector<Signal> filter_inputs(int order, const Signal& u) const;
    Eigen::MatrixXd filtered_channels(int order, const Signal& u) const;  // N x B

private:
    std::vector<BasisSpec> specs_;
    std::vector<Eigen::MatrixXd> tables_;
};

/// Orthonormal projection of a time-domain kernel onto the basis:
/// alpha(i_1..i_m) = sum_tau h(tau_1..tau_m) prod_j f_{i_j}(tau_j).
/// Exact inverse of reconstruct_kernel when h lies in the basis span.
CoefficientKernel project_kernel(const SymmetricKernel& h, const Eigen::MatrixXd& ir);
CoefficientKernel project_kernel(const SymmetricKernel& h, const BasisBank& bank);

/// Kernel expansion h(tau_1..tau_m) = sum_i alpha(i_1..i_m) prod_j f_{i_j}(tau_j)
/// evaluated on the lag grid [0, memory)^m.
SymmetricKernel reconstruct_kernel(const CoefficientKernel& alpha, const Eigen::MatrixXd& ir, int memory);
SymmetricKernel reconstruct_kernel(const CoefficientKernel& alpha, const BasisBank& bank, int memory);

}  // namespace vobf

#endif
