#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "qgc/kernels.hpp"

using namespace qgc;
using kern::BlockGate;

namespace {

std::mt19937 rng(31);

CMat random_cmat(int n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    CMat m(n);
    for (cplx& z : m.a) z = cplx{dist(rng), dist(rng)};
    return m;
}

RMat random_symmetric(int n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    RMat m(n);
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) m(r, c) = m(c, r) = dist(rng);
    return m;
}

double max_abs_diff(const CMat& a, const CMat& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.a.size(); ++i) worst = std::max(worst, std::abs(a.a[i] - b.a[i]));
    return worst;
}

double max_abs_diff(const RMat& a, const RMat& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.a.size(); ++i) worst = std::max(worst, std::abs(a.a[i] - b.a[i]));
    return worst;
}

BlockGate random_gate(int nbits) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    BlockGate g;
    g.target = std::uniform_int_distribution<int>(0, nbits - 1)(rng);
    for (int b = 0; b < nbits; ++b) {
        if (b == g.target) continue;
        int pick = std::uniform_int_distribution<int>(0, 2)(rng);
        if (pick == 0) continue;
        g.ctrl_mask |= std::uint64_t{1} << b;
        if (pick == 2) g.ctrl_value |= std::uint64_t{1} << b;
    }
    g.m00 = cplx{dist(rng), dist(rng)};
    g.m01 = cplx{dist(rng), dist(rng)};
    g.m10 = cplx{dist(rng), dist(rng)};
    g.m11 = cplx{dist(rng), dist(rng)};
    return g;
}

}  // namespace

TEST_CASE("matmul paths agree and multiply correctly") {
    for (int n : {1, 2, 7, 16, 33}) {
        CMat a = random_cmat(n), b = random_cmat(n);
        CMat serial_out(n), par_out(n);
        kern::serial::matmul(a, b, serial_out);
        kern::par::matmul(a, b, par_out);
        CHECK(max_abs_diff(serial_out, par_out) < 1e-13);
    }

    // analytic 2x2 check
    CMat x(2), y(2);
    x(0, 0) = {1, 0}; x(0, 1) = {2, 0}; x(1, 0) = {3, 0}; x(1, 1) = {4, 0};
    y(0, 0) = {0, 1}; y(1, 1) = {0, 1};
    CMat out(2);
    kern::serial::matmul(x, y, out);
    CHECK(out(0, 0) == cplx{0, 1});
    CHECK(out(0, 1) == cplx{0, 2});
    CHECK(out(1, 0) == cplx{0, 3});
    CHECK(out(1, 1) == cplx{0, 4});
}

TEST_CASE("block gate application matches between paths") {
    for (int nbits : {1, 2, 4, 6}) {
        for (int trial = 0; trial < 8; ++trial) {
            BlockGate g = random_gate(nbits);
            CMat m = random_cmat(1 << nbits);
            CMat serial_m = m, par_m = m;
            kern::serial::apply_block_gate(serial_m, g);
            kern::par::apply_block_gate(par_m, g);
            CHECK(max_abs_diff(serial_m, par_m) < 1e-13);
        }
    }
}

TEST_CASE("gate application equals explicit matrix product") {
    int nbits = 3, n = 1 << nbits;
    BlockGate g = random_gate(nbits);
    CMat m = random_cmat(n);

    // build the full gate matrix, then compare G*m against the kernel
    CMat full(n);
    for (int k = 0; k < n; ++k) full(k, k) = {1.0, 0.0};
    for (int r0 = 0; r0 < n; ++r0) {
        if ((static_cast<std::uint64_t>(r0) & g.ctrl_mask) != g.ctrl_value) continue;
        if (r0 & (1 << g.target)) continue;
        int r1 = r0 | (1 << g.target);
        full(r0, r0) = g.m00;
        full(r0, r1) = g.m01;
        full(r1, r0) = g.m10;
        full(r1, r1) = g.m11;
    }
    CMat expected(n);
    kern::serial::matmul(full, m, expected);

    CMat applied = m;
    kern::par::apply_block_gate(applied, g);
    CHECK(max_abs_diff(applied, expected) < 1e-13);
}

TEST_CASE("swap application permutes states") {
    int n = 8;
    CMat m = CMat::identity(n);
    kern::par::apply_swap(m, 0, 2, 0, 0);
    // uncontrolled swap of bits 0 and 2: states 1 <-> 4, 3 <-> 6
    for (int k : {0, 2, 5, 7}) CHECK(m(k, k) == cplx{1.0, 0.0});
    CHECK(m(1, 4) == cplx{1.0, 0.0});
    CHECK(m(4, 1) == cplx{1.0, 0.0});
    CHECK(m(3, 6) == cplx{1.0, 0.0});
    CHECK(m(6, 3) == cplx{1.0, 0.0});

    for (int nbits : {2, 3, 5}) {
        CMat a = random_cmat(1 << nbits);
        CMat b = a;
        std::uint64_t mask = nbits > 2 ? 0b100 : 0;
        kern::serial::apply_swap(a, 0, 1, mask, mask);
        kern::par::apply_swap(b, 0, 1, mask, mask);
        CHECK(max_abs_diff(a, b) == 0.0);
    }
}

TEST_CASE("phase application multiplies matching rows") {
    int n = 4;
    CMat m = CMat::identity(n);
    kern::par::apply_phase(m, 0b10, 0b10, 0.5);
    CHECK(m(0, 0) == cplx{1.0, 0.0});
    CHECK(m(1, 1) == cplx{1.0, 0.0});
    CHECK(std::abs(m(2, 2) - std::polar(1.0, 0.5)) < 1e-15);
    CHECK(std::abs(m(3, 3) - std::polar(1.0, 0.5)) < 1e-15);

    CMat a = random_cmat(16), b = a;
    kern::serial::apply_phase(a, 0b101, 0b001, -1.2);
    kern::par::apply_phase(b, 0b101, 0b001, -1.2);
    CHECK(max_abs_diff(a, b) == 0.0);
}

TEST_CASE("frobenius distance paths agree") {
    for (int n : {2, 9, 32}) {
        CMat a = random_cmat(n), b = random_cmat(n);
        CHECK(kern::serial::frobenius_distance(a, b) ==
              doctest::Approx(kern::par::frobenius_distance(a, b)).epsilon(1e-14));
    }
}

TEST_CASE("jacobi rotation paths agree") {
    for (int n : {4, 16, 40}) {
        RMat a1 = random_symmetric(n);
        RMat a2 = a1;
        RMat v1 = RMat::identity(n), v2 = v1;
        kern::serial::jacobi_rotate(a1, v1, 1, n - 1, 0.8, 0.6);
        kern::par::jacobi_rotate(a2, v2, 1, n - 1, 0.8, 0.6);
        CHECK(max_abs_diff(a1, a2) < 1e-14);
        CHECK(max_abs_diff(v1, v2) < 1e-14);
        CHECK(a1.max_asymmetry() < 1e-13);
    }
}

TEST_CASE("evolution accumulation paths agree") {
    for (int n : {2, 8, 24}) {
        RMat vec = random_symmetric(n);  // any dense matrix works for the comparison
        std::vector<double> values(n);
        std::uniform_real_distribution<double> dist(-3.0, 3.0);
        for (double& v : values) v = dist(rng);
        CMat out1(n), out2(n);
        kern::serial::evolution_from_eigen(vec, values, out1);
        kern::par::evolution_from_eigen(vec, values, out2);
        CHECK(max_abs_diff(out1, out2) < 1e-13);
    }
}
