// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 vobf contributors

#ifndef VOBF_KERNEL_HPP
#define VOBF_KERNEL_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "vobf/multiindex.hpp"

namespace vobf {

using Signal = std::vector<double>;

/// Symmetric Volterra kernel h_m stored as unique coefficients over sorted
/// lag tuples, in the canonical lexicographic order. The stored value is the
/// symmetric-tensor value: h(any permutation of tau) == value at sorted tau.
struct SymmetricKernel {
    int order = 0;
    int memory = 0;
    std::vector<double> values;

    SymmetricKernel() = default;
    SymmetricKernel(int order_, int memory_);

    std::size_t size() const { return values.size(); }
    double value_at(MultiIndex tau) const;  // accepts unsorted tuples
    double& at(const MultiIndex& sorted_tau);
    double squared_tensor_norm() const;     // sum over the full tensor of h^2
};

/// Expansion-coefficient kernel alpha_m over basis-function index tuples,
/// same symmetric storage scheme as SymmetricKernel.
struct CoefficientKernel {
    int order = 0;
    int basis_size = 0;
    std::vector<double> values;

    CoefficientKernel() = default;
    CoefficientKernel(int order_, int basis_size_);

    std::size_t size() const { return values.size(); }
    double value_at(MultiIndex idx) const;
    double& at(const MultiIndex& sorted_idx);
};

struct VolterraModel {
    int max_order = 0;
    std::vector<SymmetricKernel> kernels;   // orders 1..max_order
    std::vector<std::uint8_t> included;     // optional mask, defaults all-on

    VolterraModel() = default;
    explicit VolterraModel(std::vector<SymmetricKernel> ks);
    bool is_included(int order) const;
};

/// Layout of the stacked parameter vector theta = [h1; h2_bar; ...]: one
/// block per kernel order, columns in canonical enumeration order.
struct KernelBlock {
    int order = 0;
    int extent = 0;                      // n_m for lag space, B_m for basis space
    std::size_t offset = 0;
    std::vector<MultiIndex> indices;
    std::vector<double> mults;           // multiplicity per index
};

struct ModelLayout {
    std::vector<KernelBlock> blocks;
    std::size_t total = 0;

    /// extents[k] is the extent for order k+1.
    static ModelLayout make(const std::vector<int>& extents);
    const KernelBlock& block(int order) const;
};

Eigen::VectorXd pack_kernels(const std::vector<SymmetricKernel>& ks);
Eigen::VectorXd pack_coefficients(const std::vector<CoefficientKernel>& ks);
std::vector<SymmetricKernel> unpack_kernels(const Eigen::VectorXd& theta, const ModelLayout& layout);
std::vector<CoefficientKernel> unpack_coefficients(const Eigen::VectorXd& alpha, const ModelLayout& layout);

// -- full-tensor helpers ------------------------------------------------
// Row-major dense tensor of shape extent^order; used by the basis projection
// fast paths and by test oracles.

std::vector<double> to_full_tensor(int order, int extent, const std::vector<double>& unique_values);
std::vector<double> unique_from_full(int order, int extent, const std::vector<double>& full);

/// Contract every mode of a full tensor with F (rows x extent), preserving
/// axis order. Result has shape rows^order.
std::vector<double> contract_all_modes(const std::vector<double>& full, int order, int extent,
                                       const Eigen::MatrixXd& f);

// -- regressors and evaluation -------------------------------------------

/// Per-order channel matrix: column l holds channel signal l (a delayed copy
/// of u for lag space, or u filtered by basis function l+1 for basis space).
Eigen::MatrixXd delay_channels(const Signal& u, int extent);

/// Regressor with rows = time, columns in ParameterVector order. Entry for
/// index tuple idx is multiplicity(idx) * prod_j channel_{idx_j}(k).
Eigen::MatrixXd build_regressor(const std::vector<Eigen::MatrixXd>& channels, const ModelLayout& layout);

/// Time-domain regressor of the least-squares problem (zero-padded lags).
Eigen::MatrixXd build_time_regressor(const Signal& u, const ModelLayout& layout);

/// Output of sum_blocks sum_idx theta * mult * prod channels, without
/// materializing the regressor.
Signal evaluate_with_channels(const std::vector<Eigen::MatrixXd>& channels, const ModelLayout& layout,
                              const Eigen::VectorXd& theta);

/// Noise-free Volterra response with u(k)=0 for k<0.
Signal evaluate_volterra(const VolterraModel& model, const Signal& u);

}  // namespace vobf

#endif
