#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qgc {

using cplx = std::complex<double>;

// Dense real square matrix, row-major.
struct RMat {
    int n = 0;
    std::vector<double> a;

    RMat() = default;
    explicit RMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0.0) {}

    double& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
    double* row(int r) { return a.data() + static_cast<std::size_t>(r) * n; }
    const double* row(int r) const { return a.data() + static_cast<std::size_t>(r) * n; }

    static RMat identity(int dim) {
        RMat m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    // Largest |a(r,c) - a(c,r)|.
    double max_asymmetry() const {
        double worst = 0.0;
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c) {
                double d = (*this)(r, c) - (*this)(c, r);
                if (d < 0) d = -d;
                if (d > worst) worst = d;
            }
        return worst;
    }
};

// Dense complex square matrix, row-major.
struct CMat {
    int n = 0;
    std::vector<cplx> a;

    CMat() = default;
    explicit CMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}

    cplx& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    cplx operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
    cplx* row(int r) { return a.data() + static_cast<std::size_t>(r) * n; }
    const cplx* row(int r) const { return a.data() + static_cast<std::size_t>(r) * n; }

    static CMat identity(int dim) {
        CMat m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = cplx{1.0, 0.0};
        return m;
    }
};

}  // namespace qgc
