// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 vobf contributors

#include "vobf/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace vobf {

namespace {

void check_unit_interval(double v, const char* name) {
    if (!(v > -1.0 && v < 1.0)) {
        throw std::invalid_argument(std::string("BasisSpec: parameter ") + name + " must lie in (-1, 1), got " +
                                    std::to_string(v));
    }
}

struct Stage {
    std::vector<double> num;
    std::vector<double> den;
};

// First-order Laguerre stages under F(z) = sum f(tau) z^-tau:
//   base:     sqrt(1-a^2) / (z - a)        -> num {0, s},     den {1, -a}
//   all-pass: (1 - a z) / (z - a)          -> num {-a, 1},    den {1, -a}
Stage laguerre_base(double a) {
    const double s = std::sqrt(1.0 - a * a);
    return {{0.0, s}, {1.0, -a}};
}

Stage laguerre_allpass(double a) { return {{-a, 1.0}, {1.0, -a}}; }

// Second-order Kautz stages with shared denominator z^2 + b(c-1) z - c:
//   odd base:  sqrt(1-c^2) (z - b) / D(z)
//   even base: sqrt((1-c^2)(1-b^2)) / D(z)
//   all-pass:  (-c z^2 + b(c-1) z + 1) / D(z)
std::vector<double> kautz_den(double b, double c) { return {1.0, b * (c - 1.0), -c}; }

Stage kautz_odd_base(double b, double c) {
    const double s = std::sqrt(1.0 - c * c);
    return {{0.0, s, -b * s}, kautz_den(b, c)};
}

Stage kautz_even_base(double b, double c) {
    const double s = std::sqrt((1.0 - c * c) * (1.0 - b * b));
    return {{0.0, 0.0, s}, kautz_den(b, c)};
}

Stage kautz_allpass(double b, double c) { return {{-c, b * (c - 1.0), 1.0}, kautz_den(b, c)}; }

// Direct difference equation; stages produced above are stable by their
// parameter constraints, so skip RationalFilter's root check here.
Signal run_stage(const Stage& st, const Signal& u) {
    const std::size_t n = u.size();
    Signal y(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < st.num.size() && i <= k; ++i) acc += st.num[i] * u[k - i];
        for (std::size_t j = 1; j < st.den.size() && j <= k; ++j) acc -= st.den[j] * y[k - j];
        y[k] = acc;
    }
    return y;
}

// Outputs of all B functions of the basis applied to `input` (which is a
// unit impulse for impulse responses, or the data signal for filtering).
std::vector<Signal> run_basis_cascade(const BasisSpec& spec, const Signal& input) {
    std::vector<Signal> out;
    out.reserve(static_cast<std::size_t>(spec.count));
    switch (spec.kind) {
        case BasisKind::fir: {
            for (int i = 0; i < spec.count; ++i) {
                Signal d(input.size(), 0.0);
                for (std::size_t k = static_cast<std::size_t>(i); k < input.size(); ++k) {
                    d[k] = input[k - static_cast<std::size_t>(i)];
                }
                out.push_back(std::move(d));
            }
            break;
        }
        case BasisKind::laguerre: {
            Signal cur = run_stage(laguerre_base(spec.a), input);
            const Stage ap = laguerre_allpass(spec.a);
            for (int i = 1; i <= spec.count; ++i) {
                out.push_back(cur);
                if (i < spec.count) cur = run_stage(ap, cur);
            }
            break;
        }
        case BasisKind::kautz: {
            Signal odd = run_stage(kautz_odd_base(spec.b, spec.c), input);
            Signal even = run_stage(kautz_even_base(spec.b, spec.c), input);
            const Stage ap = kautz_allpass(spec.b, spec.c);
            for (int pair = 0; 2 * pair < spec.count; ++pair) {
                out.push_back(odd);
                out.push_back(even);
                if (2 * (pair + 1) < spec.count) {
                    odd = run_stage(ap, odd);
                    even = run_stage(ap, even);
                }
            }
            break;
        }
    }
    return out;
}

}  // namespace

std::string to_string(BasisKind k) {
    switch (k) {
        case BasisKind::fir: return "fir";
        case BasisKind::laguerre: return "laguerre";
        case BasisKind::kautz: return "kautz";
    }
    return "?";
}

BasisKind basis_kind_from_string(const std::string& s) {
    if (s == "fir") return BasisKind::fir;
    if (s == "laguerre") return BasisKind::laguerre;
    if (s == "kautz") return BasisKind::kautz;
    throw std::invalid_argument("unknown basis kind: " + s);
}

BasisSpec BasisSpec::fir(int count) {
    if (count < 1) throw std::invalid_argument("BasisSpec: function count must be >= 1");
    BasisSpec s;
    s.kind = BasisKind::fir;
    s.count = count;
    return s;
}

BasisSpec BasisSpec::laguerre(double a, int count) {
    if (count < 1) throw std::invalid_argument("BasisSpec: function count must be >= 1");
    check_unit_interval(a, "a");
    BasisSpec s;
    s.kind = BasisKind::laguerre;
    s.a = a;
    s.count = count;
    return s;
}

BasisSpec BasisSpec::kautz(double b, double c, int count) {
    if (count < 1) throw std::invalid_argument("BasisSpec: function count must be >= 1");
    check_unit_interval(b, "b");
    check_unit_interval(c, "c");
    if (count % 2 != 0) {
        throw std::invalid_argument("BasisSpec: Kautz functions come in pairs, function count must be even (got " +
                                    std::to_string(count) + ")");
    }
    BasisSpec s;
    s.kind = BasisKind::kautz;
    s.b = b;
    s.c = c;
    s.count = count;
    return s;
}

double BasisSpec::pole_modulus() const {
    switch (kind) {
        case BasisKind::fir: return 0.0;
        case BasisKind::laguerre: return std::abs(a);
        case BasisKind::kautz: {
            // Roots of z^2 + b(c-1) z - c.
            const double p = b * (c - 1.0), q = -c;
            const double disc = p * p - 4.0 * q;
            if (disc >= 0.0) {
                const double r = std::sqrt(disc);
                return std::max(std::abs((-p + r) / 2.0), std::abs((-p - r) / 2.0));
            }
            return std::sqrt(q);  // complex pair, |z|^2 = q
        }
    }
    return 0.0;
}

std::vector<double> BasisSpec::params() const {
    switch (kind) {
        case BasisKind::fir: return {};
        case BasisKind::laguerre: return {a};
        case BasisKind::kautz: return {b, c};
    }
    return {};
}

std::vector<double> laguerre_ir(double a, int i, int length) {
    if (i < 1) throw std::invalid_argument("laguerre_ir: function index must be >= 1");
    check_unit_interval(a, "a");
    Signal impulse(static_cast<std::size_t>(length), 0.0);
    if (length > 0) impulse[0] = 1.0;
    Signal cur = run_stage(laguerre_base(a), impulse);
    const Stage ap = laguerre_allpass(a);
    for (int k = 1; k < i; ++k) cur = run_stage(ap, cur);
    return cur;
}

std::vector<double> kautz_ir(double b, double c, int i, int length) {
    if (i < 1) throw std::invalid_argument("kautz_ir: function index must be >= 1");
    check_unit_interval(b, "b");
    check_unit_interval(c, "c");
    Signal impulse(static_cast<std::size_t>(length), 0.0);
    if (length > 0) impulse[0] = 1.0;
    Signal cur = (i % 2 == 1) ? run_stage(kautz_odd_base(b, c), impulse) : run_stage(kautz_even_base(b, c), impulse);
    const Stage ap = kautz_allpass(b, c);
    const int pairs = (i - 1) / 2;
    for (int k = 0; k < pairs; ++k) cur = run_stage(ap, cur);
    return cur;
}

Eigen::MatrixXd realize_ir_table(const BasisSpec& spec, int length) {
    if (length < 1) throw std::invalid_argument("realize_ir_table: length must be >= 1");
    Signal impulse(static_cast<std::size_t>(length), 0.0);
    impulse[0] = 1.0;
    const auto rows = run_basis_cascade(spec, impulse);
    Eigen::MatrixXd table(spec.count, length);
    for (int i = 0; i < spec.count; ++i) {
        for (int t = 0; t < length; ++t) table(i, t) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
    }
    return table;
}

BasisBank BasisBank::realize(std::vector<BasisSpec> specs, int memory_hint) {
    if (specs.empty()) throw std::invalid_argument("BasisBank: no basis specs");
    if (memory_hint < 1) throw std::invalid_argument("BasisBank: memory hint must be >= 1");
    BasisBank bank;
    bank.specs_ = std::move(specs);
    for (const auto& spec : bank.specs_) {
        if (spec.kind == BasisKind::fir) {
            bank.tables_.push_back(realize_ir_table(spec, std::max(spec.count, memory_hint)));
            continue;
        }
        int length = std::max(512, 8 * memory_hint);
        const double rho = spec.pole_modulus();
        for (;;) {
            Eigen::MatrixXd table = realize_ir_table(spec, length);
            // Geometric decay bound on the discarded tail: with amplitude A
            // near the end of the window, sum_{tau>=L} f^2 <~ A^2/(1-rho^2).
            const int probe = std::min(16, length);
            const double amp = table.rightCols(probe).cwiseAbs().maxCoeff();
            const double tail_bound = (rho >= 1.0) ? 1.0 : amp * amp / (1.0 - rho * rho);
            if (tail_bound < 1e-10 || length >= (1 << 22)) {
                bank.tables_.push_back(std::move(table));
                break;
            }
            length *= 2;
        }
    }
    return bank;
}

const BasisSpec& BasisBank::spec(int order) const {
    if (order < 1 || order > num_orders()) throw std::invalid_argument("BasisBank: order out of range");
    return specs_[static_cast<std::size_t>(order - 1)];
}

const Eigen::MatrixXd& BasisBank::ir(int order) const {
    if (order < 1 || order > num_orders()) throw std::invalid_argument("BasisBank: order out of range");
    return tables_[static_cast<std::size_t>(order - 1)];
}

int BasisBank::length(int order) const { return static_cast<int>(ir(order).cols()); }

std::vector<Signal> BasisBank::filter_inputs(int order, const Signal& u) const {
    if (!all_finite(u)) throw std::invalid_argument("filter_inputs: input contains non-finite samples");
    return run_basis_cascade(spec(order), u);
}

Eigen::MatrixXd BasisBank::filtered_channels(int order, const Signal& u) const {
    const auto sigs = filter_inputs(order, u);
    Eigen::MatrixXd ch(static_cast<Eigen::Index>(u.size()), static_cast<Eigen::Index>(sigs.size()));
    for (std::size_t l = 0; l < sigs.size(); ++l) {
        for (std::size_t k = 0; k < u.size(); ++k) ch(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = sigs[l][k];
    }
    return ch;
}

CoefficientKernel project_kernel(const SymmetricKernel& h, const Eigen::MatrixXd& ir) {
    const int n = h.memory;
    if (ir.cols() < n) throw std::invalid_argument("project_kernel: basis impulse responses shorter than kernel memory");
    const int bcount = static_cast<int>(ir.rows());
    const Eigen::MatrixXd f = ir.leftCols(n);  // B x n
    const auto full = to_full_tensor(h.order, n, h.values);
    const auto alpha_full = contract_all_modes(full, h.order, n, f);
    CoefficientKernel alpha(h.order, bcount);
    alpha.values = unique_from_full(h.order, bcount, alpha_full);
    return alpha;
}

CoefficientKernel project_kernel(const SymmetricKernel& h, const BasisBank& bank) {
    return project_kernel(h, bank.ir(h.order));
}

SymmetricKernel reconstruct_kernel(const CoefficientKernel& alpha, const Eigen::MatrixXd& ir, int memory) {
    if (ir.cols() < memory) throw std::invalid_argument("reconstruct_kernel: basis impulse responses shorter than target memory");
    if (static_cast<int>(ir.rows()) != alpha.basis_size) {
        throw std::invalid_argument("reconstruct_kernel: basis size mismatch");
    }
    const Eigen::MatrixXd g = ir.leftCols(memory).transpose();  // n x B
    const auto alpha_full = to_full_tensor(alpha.order, alpha.basis_size, alpha.values);
    const auto h_full = contract_all_modes(alpha_full, alpha.order, alpha.basis_size, g);
    SymmetricKernel h(alpha.order, memory);
    h.values = unique_from_full(alpha.order, memory, h_full);
    return h;
}

SymmetricKernel reconstruct_kernel(const CoefficientKernel& alpha, const BasisBank& bank, int memory) {
    return reconstruct_kernel(alpha, bank.ir(alpha.order), memory);
}

}  // namespace vobf
