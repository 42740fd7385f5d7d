#pragma once

// Second, independent route to exp(iH): scaling and squaring with a Taylor
// series, written with its own plain-loop matmul so it shares nothing with
// the library's eigendecomposition path.

#include <cmath>
#include <cstddef>

#include "qgc/cmat.hpp"

inline qgc::CMat oracle_matmul(const qgc::CMat& x, const qgc::CMat& y) {
    int n = x.n;
    qgc::CMat out(n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            qgc::cplx v = x(r, k);
            if (v == qgc::cplx{}) continue;
            for (int c = 0; c < n; ++c) out(r, c) += v * y(k, c);
        }
    return out;
}

inline qgc::CMat oracle_expm_i(const qgc::RMat& h) {
    int n = h.n;
    double norm = 0.0;  // max absolute row sum
    for (int r = 0; r < n; ++r) {
        double s = 0.0;
        for (int c = 0; c < n; ++c) s += std::abs(h(r, c));
        norm = std::max(norm, s);
    }
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.25) {
        scale *= 0.5;
        ++squarings;
    }

    qgc::CMat x(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) x(r, c) = qgc::cplx{0.0, h(r, c) * scale};

    qgc::CMat sum = qgc::CMat::identity(n);
    qgc::CMat term = qgc::CMat::identity(n);
    for (int k = 1; k <= 20; ++k) {
        term = oracle_matmul(term, x);
        for (qgc::cplx& z : term.a) z /= static_cast<double>(k);
        for (std::size_t i = 0; i < sum.a.size(); ++i) sum.a[i] += term.a[i];
    }
    for (int j = 0; j < squarings; ++j) sum = oracle_matmul(sum, sum);
    return sum;
}
