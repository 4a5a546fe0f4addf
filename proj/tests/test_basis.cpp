// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 vobf contributors

#include <doctest.h>

#include <cmath>
#include <random>

#include "vobf/basis.hpp"

using namespace vobf;

namespace {

Signal random_signal(unsigned seed, std::size_t n) {
    std::mt19937 eng(seed);
    std::normal_distribution<double> d(0.0, 1.0);
    Signal s(n);
    for (auto& v : s) v = d(eng);
    return s;
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

}  // namespace

TEST_CASE("laguerre_ir: a = 0 gives pure delays") {
    for (int i = 1; i <= 4; ++i) {
        const auto f = laguerre_ir(0.0, i, 10);
        for (int t = 0; t < 10; ++t) {
            CHECK(f[static_cast<std::size_t>(t)] == doctest::Approx(t == i ? 1.0 : 0.0).epsilon(1e-15));
        }
    }
}

TEST_CASE("laguerre_ir: first function matches long-division closed form") {
    const double a = 0.5;
    const auto f = laguerre_ir(a, 1, 40);
    CHECK(f[0] == 0.0);
    const double s = std::sqrt(0.75);
    for (int t = 1; t < 40; ++t) {
        CHECK(f[static_cast<std::size_t>(t)] == doctest::Approx(s * std::pow(0.5, t - 1)).epsilon(1e-12));
    }
}

TEST_CASE("laguerre_ir: numerically orthonormal") {
    const int L = 2000;
    std::vector<std::vector<double>> f;
    for (int i = 1; i <= 5; ++i) f.push_back(laguerre_ir(0.5, i, L));
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            double dot = 0.0;
            for (int t = 0; t < L; ++t) dot += f[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] * f[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
            CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("laguerre_ir: |a| >= 1 rejected") {
    CHECK_THROWS_AS(laguerre_ir(1.0, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(laguerre_ir(-1.2, 1, 10), std::invalid_argument);
}

TEST_CASE("kautz_ir: b = c = 0 degenerates to unit delays") {
    const auto f1 = kautz_ir(0.0, 0.0, 1, 8);
    const auto f2 = kautz_ir(0.0, 0.0, 2, 8);
    const auto f3 = kautz_ir(0.0, 0.0, 3, 8);
    const auto f4 = kautz_ir(0.0, 0.0, 4, 8);
    for (int t = 0; t < 8; ++t) {
        CHECK(f1[static_cast<std::size_t>(t)] == doctest::Approx(t == 1 ? 1.0 : 0.0).epsilon(1e-15));
        CHECK(f2[static_cast<std::size_t>(t)] == doctest::Approx(t == 2 ? 1.0 : 0.0).epsilon(1e-15));
        CHECK(f3[static_cast<std::size_t>(t)] == doctest::Approx(t == 3 ? 1.0 : 0.0).epsilon(1e-15));
        CHECK(f4[static_cast<std::size_t>(t)] == doctest::Approx(t == 4 ? 1.0 : 0.0).epsilon(1e-15));
    }
}

TEST_CASE("kautz_ir matches a single expanded difference equation") {
    const double b = 0.2, c = -0.5;
    const double s = std::sqrt(1.0 - c * c);
    const double se = std::sqrt((1.0 - c * c) * (1.0 - b * b));
    const std::vector<double> den{1.0, b * (c - 1.0), -c};
    const std::vector<double> odd_num{0.0, s, -b * s};
    const std::vector<double> even_num{0.0, 0.0, se};
    const std::vector<double> ap_num{-c, b * (c - 1.0), 1.0};
    const int L = 200;

    // F_3 = odd base * one all-pass, expanded to one rational transfer function
    {
        RationalFilter expanded(poly_mul(odd_num, ap_num), poly_mul(den, den));
        const Signal ref = expanded.impulse_response(L);
        const auto got = kautz_ir(b, c, 3, L);
        for (int t = 0; t < L; ++t) CHECK(got[static_cast<std::size_t>(t)] == doctest::Approx(ref[static_cast<std::size_t>(t)]).epsilon(1e-11));
    }
    // F_4 = even base * one all-pass
    {
        RationalFilter expanded(poly_mul(even_num, ap_num), poly_mul(den, den));
        const Signal ref = expanded.impulse_response(L);
        const auto got = kautz_ir(b, c, 4, L);
        for (int t = 0; t < L; ++t) CHECK(got[static_cast<std::size_t>(t)] == doctest::Approx(ref[static_cast<std::size_t>(t)]).epsilon(1e-11));
    }
}

TEST_CASE("kautz_ir: numerically orthonormal") {
    const int L = 2000;
    std::vector<std::vector<double>> f;
    for (int i = 1; i <= 6; ++i) f.push_back(kautz_ir(0.2, -0.5, i, L));
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            double dot = 0.0;
            for (int t = 0; t < L; ++t) dot += f[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] * f[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
            CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-8));
        }
    }
}

TEST_CASE("BasisSpec validation") {
    CHECK_THROWS_AS(BasisSpec::kautz(0.2, -0.5, 5), std::invalid_argument);  // odd count
    CHECK_THROWS_AS(BasisSpec::laguerre(1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(BasisSpec::kautz(1.1, 0.0, 4), std::invalid_argument);
    CHECK_NOTHROW(BasisSpec::kautz(0.2, -0.5, 6));
}

TEST_CASE("filter_inputs: FIR bank is a delay bank") {
    BasisBank bank = BasisBank::realize({BasisSpec::fir(4)}, 4);
    const Signal u = random_signal(1, 30);
    const auto uf = bank.filter_inputs(1, u);
    REQUIRE(uf.size() == 4);
    for (int l = 1; l <= 4; ++l) {
        for (std::size_t k = 0; k < u.size(); ++k) {
            const double expect = (static_cast<long>(k) - (l - 1) >= 0) ? u[k - static_cast<std::size_t>(l - 1)] : 0.0;
            CHECK(uf[static_cast<std::size_t>(l - 1)][k] == expect);
        }
    }
}

TEST_CASE("filter_inputs: Laguerre a = 0 delays by the function index") {
    BasisBank bank = BasisBank::realize({BasisSpec::laguerre(0.0, 3)}, 8);
    const Signal u = random_signal(2, 30);
    const auto uf = bank.filter_inputs(1, u);
    for (int i = 1; i <= 3; ++i) {
        for (std::size_t k = 0; k < u.size(); ++k) {
            const double expect = (static_cast<long>(k) - i >= 0) ? u[k - static_cast<std::size_t>(i)] : 0.0;
            CHECK(uf[static_cast<std::size_t>(i - 1)][k] == doctest::Approx(expect).epsilon(1e-14));
        }
    }
}

TEST_CASE("filter_inputs matches direct truncated convolution") {
    BasisBank bank = BasisBank::realize({BasisSpec::laguerre(0.6, 4)}, 64);
    const int L = 500;
    const Signal u = random_signal(3, 300);
    const auto uf = bank.filter_inputs(1, u);
    const Eigen::MatrixXd& ir = bank.ir(1);
    REQUIRE(ir.cols() >= L);
    for (int i = 0; i < 4; ++i) {
        for (std::size_t k = 0; k < u.size(); ++k) {
            double conv = 0.0;
            for (int t = 0; t < L && t <= static_cast<int>(k); ++t) {
                conv += ir(i, t) * u[k - static_cast<std::size_t>(t)];
            }
            CHECK(uf[static_cast<std::size_t>(i)][k] == doctest::Approx(conv).epsilon(1e-9));
        }
    }
}

TEST_CASE("reconstruct_kernel: rank-one term and zero coefficients") {
    BasisBank bank = BasisBank::realize({BasisSpec::laguerre(0.0, 3), BasisSpec::laguerre(0.4, 3)}, 24);
    CoefficientKernel alpha(2, 3);
    alpha.at({1, 1}) = 1.0;  // basis function i = 2 paired with itself
    const SymmetricKernel h = reconstruct_kernel(alpha, bank.ir(2), 24);
    const Eigen::MatrixXd& ir = bank.ir(2);
    for (int t1 = 0; t1 < 24; ++t1) {
        for (int t2 = t1; t2 < 24; ++t2) {
            CHECK(h.value_at({t1, t2}) == doctest::Approx(ir(1, t1) * ir(1, t2)).epsilon(1e-12));
        }
    }

    CoefficientKernel zero(2, 3);
    const SymmetricKernel hz = reconstruct_kernel(zero, bank.ir(2), 24);
    for (double v : hz.values) CHECK(v == 0.0);
}

TEST_CASE("reconstruct_kernel matches the literal double sum") {
    BasisBank bank = BasisBank::realize({BasisSpec::laguerre(0.5, 3), BasisSpec::laguerre(0.5, 3)}, 16);
    CoefficientKernel alpha(2, 3);
    std::mt19937 eng(9);
    std::normal_distribution<double> d;
    for (auto& v : alpha.values) v = d(eng);

    const int memory = 16;
    const SymmetricKernel h = reconstruct_kernel(alpha, bank.ir(2), memory);
    const Eigen::MatrixXd& ir = bank.ir(2);
    for (int t1 = 0; t1 < memory; ++t1) {
        for (int t2 = 0; t2 < memory; ++t2) {
            double ref = 0.0;
            for (int i1 = 0; i1 < 3; ++i1) {
                for (int i2 = 0; i2 < 3; ++i2) {
                    ref += alpha.value_at({i1, i2}) * ir(i1, t1) * ir(i2, t2);
                }
            }
            CHECK(h.value_at({t1, t2}) == doctest::Approx(ref).epsilon(1e-11));
        }
    }
}

TEST_CASE("project_kernel: span round trip and zero kernel") {
    BasisBank bank = BasisBank::realize({BasisSpec::laguerre(0.6, 4)}, 100);
    CoefficientKernel alpha(1, 4);
    alpha.values = {0.7, -0.3, 0.2, 0.05};
    const SymmetricKernel h = reconstruct_kernel(alpha, bank.ir(1), 100);
    const CoefficientKernel back = project_kernel(h, bank.ir(1));
    for (std::size_t i = 0; i < alpha.values.size(); ++i) {
        CHECK(back.values[i] == doctest::Approx(alpha.values[i]).epsilon(1e-9));
    }

    SymmetricKernel zero(2, 10);
    BasisBank bank2 = BasisBank::realize({BasisSpec::laguerre(0.6, 4), BasisSpec::laguerre(0.6, 4)}, 10);
    const CoefficientKernel az = project_kernel(zero, bank2.ir(2));
    for (double v : az.values) CHECK(v == 0.0);
}

TEST_CASE("project_kernel: separable kernel projects to the outer product") {
    const double a = 0.55;
    BasisBank bank = BasisBank::realize({BasisSpec::laguerre(a, 4), BasisSpec::laguerre(a, 4)}, 120);
    const int n = 120;
    // g with substantial content in the first few Laguerre functions
    const auto f1 = laguerre_ir(a, 1, n);
    const auto f2 = laguerre_ir(a, 2, n);
    Signal g(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) g[static_cast<std::size_t>(t)] = 1.2 * f1[static_cast<std::size_t>(t)] - 0.4 * f2[static_cast<std::size_t>(t)];

    SymmetricKernel h(2, n);
    const auto idx = enumerate_indices(2, n);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        h.values[i] = g[static_cast<std::size_t>(idx[i][0])] * g[static_cast<std::size_t>(idx[i][1])];
    }

    // independent 1-D projections of g
    const Eigen::MatrixXd& ir = bank.ir(2);
    Eigen::VectorXd proj(4);
    for (int i = 0; i < 4; ++i) {
        double dot = 0.0;
        for (int t = 0; t < n; ++t) dot += ir(i, t) * g[static_cast<std::size_t>(t)];
        proj[i] = dot;
    }
    const CoefficientKernel alpha = project_kernel(h, bank.ir(2));
    for (int i1 = 0; i1 < 4; ++i1) {
        for (int i2 = i1; i2 < 4; ++i2) {
            CHECK(alpha.value_at({i1, i2}) == doctest::Approx(proj[i1] * proj[i2]).epsilon(1e-9));
        }
    }
}

TEST_CASE("project after reconstruct is the identity on coefficient space") {
    BasisBank bank = BasisBank::realize({BasisSpec::laguerre(0.6, 4), BasisSpec::laguerre(0.6, 4)}, 100);
    CoefficientKernel alpha(2, 4);
    std::mt19937 eng(17);
    std::normal_distribution<double> d;
    for (auto& v : alpha.values) v = d(eng);
    const SymmetricKernel h = reconstruct_kernel(alpha, bank.ir(2), 100);
    const CoefficientKernel back = project_kernel(h, bank.ir(2));
    for (std::size_t i = 0; i < alpha.values.size(); ++i) {
        CHECK(back.values[i] == doctest::Approx(alpha.values[i]).epsilon(1e-9));
    }
}

TEST_CASE("bank realization: orthonormality of realized tables") {
    BasisBank bank = BasisBank::realize({BasisSpec::laguerre(0.95, 6), BasisSpec::kautz(0.7, -0.7, 6)}, 70);
    for (int order = 1; order <= 2; ++order) {
        const Eigen::MatrixXd& ir = bank.ir(order);
        const Eigen::MatrixXd gram = ir * ir.transpose();
        const Eigen::MatrixXd err = gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols());
        CHECK(err.cwiseAbs().maxCoeff() < 1e-8);
    }
}
