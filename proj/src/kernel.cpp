// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 vobf contributors

#include "vobf/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace vobf {

SymmetricKernel::SymmetricKernel(int order_, int memory_) : order(order_), memory(memory_) {
    if (order_ < 1 || memory_ < 1) throw std::invalid_argument("SymmetricKernel: order and memory must be >= 1");
    values.assign(static_cast<std::size_t>(multiset_count(memory_, order_)), 0.0);
}

double SymmetricKernel::value_at(MultiIndex tau) const {
    std::sort(tau.begin(), tau.end());
    return values[index_rank(tau, memory)];
}

double& SymmetricKernel::at(const MultiIndex& sorted_tau) {
    return values[index_rank(sorted_tau, memory)];
}

double SymmetricKernel::squared_tensor_norm() const {
    const auto idx = enumerate_indices(order, memory);
    double s = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        s += static_cast<double>(multiplicity(idx[i])) * values[i] * values[i];
    }
    return s;
}

CoefficientKernel::CoefficientKernel(int order_, int basis_size_) : order(order_), basis_size(basis_size_) {
    if (order_ < 1 || basis_size_ < 1) throw std::invalid_argument("CoefficientKernel: order and basis size must be >= 1");
    values.assign(static_cast<std::size_t>(multiset_count(basis_size_, order_)), 0.0);
}

double CoefficientKernel::value_at(MultiIndex idx) const {
    std::sort(idx.begin(), idx.end());
    return values[index_rank(idx, basis_size)];
}

double& CoefficientKernel::at(const MultiIndex& sorted_idx) {
    return values[index_rank(sorted_idx, basis_size)];
}

VolterraModel::VolterraModel(std::vector<SymmetricKernel> ks) : kernels(std::move(ks)) {
    max_order = static_cast<int>(kernels.size());
    for (int m = 1; m <= max_order; ++m) {
        if (kernels[static_cast<std::size_t>(m - 1)].order != m) {
            throw std::invalid_argument("VolterraModel: kernel orders must be exactly 1..M");
        }
    }
    included.assign(kernels.size(), 1);
}

bool VolterraModel::is_included(int order) const {
    if (order < 1 || order > max_order) return false;
    return included.empty() || included[static_cast<std::size_t>(order - 1)] != 0;
}

ModelLayout ModelLayout::make(const std::vector<int>& extents) {
    ModelLayout layout;
    std::size_t off = 0;
    for (int m = 1; m <= static_cast<int>(extents.size()); ++m) {
        KernelBlock b;
        b.order = m;
        b.extent = extents[static_cast<std::size_t>(m - 1)];
        b.offset = off;
        b.indices = enumerate_indices(m, b.extent);
        b.mults.reserve(b.indices.size());
        for (const auto& idx : b.indices) b.mults.push_back(static_cast<double>(multiplicity(idx)));
        off += b.indices.size();
        layout.blocks.push_back(std::move(b));
    }
    layout.total = off;
    return layout;
}

const KernelBlock& ModelLayout::block(int order) const {
    if (order < 1 || order > static_cast<int>(blocks.size())) throw std::invalid_argument("ModelLayout: no such order");
    return blocks[static_cast<std::size_t>(order - 1)];
}

Eigen::VectorXd pack_kernels(const std::vector<SymmetricKernel>& ks) {
    std::size_t total = 0;
    for (const auto& k : ks) total += k.size();
    Eigen::VectorXd theta(static_cast<Eigen::Index>(total));
    Eigen::Index at = 0;
    for (const auto& k : ks) {
        for (double v : k.values) theta[at++] = v;
    }
    return theta;
}

Eigen::VectorXd pack_coefficients(const std::vector<CoefficientKernel>& ks) {
    std::size_t total = 0;
    for (const auto& k : ks) total += k.size();
    Eigen::VectorXd alpha(static_cast<Eigen::Index>(total));
    Eigen::Index at = 0;
    for (const auto& k : ks) {
        for (double v : k.values) alpha[at++] = v;
    }
    return alpha;
}

std::vector<SymmetricKernel> unpack_kernels(const Eigen::VectorXd& theta, const ModelLayout& layout) {
    if (static_cast<std::size_t>(theta.size()) != layout.total) throw std::invalid_argument("unpack_kernels: size mismatch");
    std::vector<SymmetricKernel> out;
    for (const auto& b : layout.blocks) {
        SymmetricKernel k(b.order, b.extent);
        for (std::size_t i = 0; i < b.indices.size(); ++i) {
            k.values[i] = theta[static_cast<Eigen::Index>(b.offset + i)];
        }
        out.push_back(std::move(k));
    }
    return out;
}

std::vector<CoefficientKernel> unpack_coefficients(const Eigen::VectorXd& alpha, const ModelLayout& layout) {
    if (static_cast<std::size_t>(alpha.size()) != layout.total) throw std::invalid_argument("unpack_coefficients: size mismatch");
    std::vector<CoefficientKernel> out;
    for (const auto& b : layout.blocks) {
        CoefficientKernel k(b.order, b.extent);
        for (std::size_t i = 0; i < b.indices.size(); ++i) {
            k.values[i] = alpha[static_cast<Eigen::Index>(b.offset + i)];
        }
        out.push_back(std::move(k));
    }
    return out;
}

std::vector<double> to_full_tensor(int order, int extent, const std::vector<double>& unique_values) {
    std::size_t full_size = 1;
    for (int i = 0; i < order; ++i) full_size *= static_cast<std::size_t>(extent);
    std::vector<double> full(full_size, 0.0);
    const auto idx = enumerate_indices(order, extent);
    if (idx.size() != unique_values.size()) throw std::invalid_argument("to_full_tensor: value count mismatch");
    MultiIndex perm;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        perm = idx[i];
        const double v = unique_values[i];
        do {
            std::size_t pos = 0;
            for (int j = 0; j < order; ++j) pos = pos * static_cast<std::size_t>(extent) + static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]);
            full[pos] = v;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return full;
}

std::vector<double> unique_from_full(int order, int extent, const std::vector<double>& full) {
    const auto idx = enumerate_indices(order, extent);
    std::vector<double> out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        std::size_t pos = 0;
        for (int j = 0; j < order; ++j) pos = pos * static_cast<std::size_t>(extent) + static_cast<std::size_t>(idx[i][static_cast<std::size_t>(j)]);
        out[i] = full[pos];
    }
    return out;
}

std::vector<double> contract_all_modes(const std::vector<double>& full, int order, int extent,
                                       const Eigen::MatrixXd& f) {
    if (f.cols() != extent) throw std::invalid_argument("contract_all_modes: matrix column count must equal extent");
    using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    std::vector<double> cur = full;
    // Repeatedly contract the leading mode and rotate it to the back; after
    // `order` passes every mode is contracted and the axis order is restored.
    const std::size_t lead = static_cast<std::size_t>(extent);
    for (int pass = 0; pass < order; ++pass) {
        const std::size_t rest = cur.size() / lead;
        Eigen::Map<const RowMat> a(cur.data(), static_cast<Eigen::Index>(lead), static_cast<Eigen::Index>(rest));
        RowMat b = f * a;                       // rows x rest
        RowMat bt = b.transpose();              // rest x rows, row-major -> [rest..., rows]
        cur.assign(bt.data(), bt.data() + bt.size());
    }
    return cur;
}

Eigen::MatrixXd delay_channels(const Signal& u, int extent) {
    const Eigen::Index n = static_cast<Eigen::Index>(u.size());
    Eigen::MatrixXd ch = Eigen::MatrixXd::Zero(n, extent);
    for (int l = 0; l < extent; ++l) {
        for (Eigen::Index k = l; k < n; ++k) ch(k, l) = u[static_cast<std::size_t>(k - l)];
    }
    return ch;
}

Eigen::MatrixXd build_regressor(const std::vector<Eigen::MatrixXd>& channels, const ModelLayout& layout) {
    if (channels.size() != layout.blocks.size()) throw std::invalid_argument("build_regressor: channel count mismatch");
    const Eigen::Index n = channels.empty() ? 0 : channels[0].rows();
    Eigen::MatrixXd phi(n, static_cast<Eigen::Index>(layout.total));
    for (std::size_t bi = 0; bi < layout.blocks.size(); ++bi) {
        const auto& b = layout.blocks[bi];
        const auto& ch = channels[bi];
        if (ch.cols() < b.extent) throw std::invalid_argument("build_regressor: channel matrix narrower than extent");
        for (std::size_t i = 0; i < b.indices.size(); ++i) {
            const auto& idx = b.indices[i];
            Eigen::VectorXd col = Eigen::VectorXd::Constant(n, b.mults[i]);
            for (int j = 0; j < b.order; ++j) {
                col.array() *= ch.col(idx[static_cast<std::size_t>(j)]).array();
            }
            phi.col(static_cast<Eigen::Index>(b.offset + i)) = col;
        }
    }
    return phi;
}

Eigen::MatrixXd build_time_regressor(const Signal& u, const ModelLayout& layout) {
    std::vector<Eigen::MatrixXd> channels;
    channels.reserve(layout.blocks.size());
    for (const auto& b : layout.blocks) channels.push_back(delay_channels(u, b.extent));
    return build_regressor(channels, layout);
}

Signal evaluate_with_channels(const std::vector<Eigen::MatrixXd>& channels, const ModelLayout& layout,
                              const Eigen::VectorXd& theta) {
    if (static_cast<std::size_t>(theta.size()) != layout.total) throw std::invalid_argument("evaluate_with_channels: theta size mismatch");
    const Eigen::Index n = channels.empty() ? 0 : channels[0].rows();
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd col(n);
    for (std::size_t bi = 0; bi < layout.blocks.size(); ++bi) {
        const auto& b = layout.blocks[bi];
        const auto& ch = channels[bi];
        for (std::size_t i = 0; i < b.indices.size(); ++i) {
            const double w = theta[static_cast<Eigen::Index>(b.offset + i)] * b.mults[i];
            if (w == 0.0) continue;
            const auto& idx = b.indices[i];
            col = ch.col(idx[0]);
            for (int j = 1; j < b.order; ++j) col.array() *= ch.col(idx[static_cast<std::size_t>(j)]).array();
            y += w * col;
        }
    }
    return Signal(y.data(), y.data() + y.size());
}

Signal evaluate_volterra(const VolterraModel& model, const Signal& u) {
    std::vector<int> extents;
    std::vector<Eigen::MatrixXd> channels;
    std::vector<SymmetricKernel> active;
    for (const auto& k : model.kernels) {
        if (!model.is_included(k.order)) continue;
        extents.push_back(k.memory);
        active.push_back(k);
    }
    // Build a layout over the included orders only, re-labelled 1..K by order.
    // Orders must stay distinct and ascending, which VolterraModel guarantees.
    ModelLayout layout;
    std::size_t off = 0;
    for (const auto& k : active) {
        KernelBlock b;
        b.order = k.order;
        b.extent = k.memory;
        b.offset = off;
        b.indices = enumerate_indices(k.order, k.memory);
        for (const auto& idx : b.indices) b.mults.push_back(static_cast<double>(multiplicity(idx)));
        off += b.indices.size();
        layout.blocks.push_back(std::move(b));
    }
    layout.total = off;
    for (const auto& b : layout.blocks) channels.push_back(delay_channels(u, b.extent));
    Eigen::VectorXd theta(static_cast<Eigen::Index>(layout.total));
    Eigen::Index at = 0;
    for (const auto& k : active) {
        for (double v : k.values) theta[at++] = v;
    }
    return evaluate_with_channels(channels, layout, theta);
}

}  // namespace vobf
