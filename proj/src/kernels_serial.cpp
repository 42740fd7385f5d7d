// Plain reference versions of the dense kernels. Kept deliberately naive:
// the OpenMP versions in kernels_par.cpp are checked against these.

#include <cmath>
#include <utility>

#include "qgc/kernels.hpp"

namespace qgc::kern::serial {

void matmul(const CMat& lhs, const CMat& rhs, CMat& out) {
    const int n = lhs.n;
    out = CMat(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx sum{0.0, 0.0};
            for (int k = 0; k < n; ++k) sum += lhs(i, k) * rhs(k, j);
            out(i, j) = sum;
        }
}

void apply_block_gate(CMat& m, const BlockGate& g) {
    const int n = m.n;
    const std::uint64_t tmask = std::uint64_t{1} << g.target;
    for (std::uint64_t r0 = 0; r0 < static_cast<std::uint64_t>(n); ++r0) {
        if (r0 & tmask) continue;
        if ((r0 & g.ctrl_mask) != g.ctrl_value) continue;
        cplx* p0 = m.row(static_cast<int>(r0));
        cplx* p1 = m.row(static_cast<int>(r0 | tmask));
        for (int c = 0; c < n; ++c) {
            cplx t0 = p0[c], t1 = p1[c];
            p0[c] = g.m00 * t0 + g.m01 * t1;
            p1[c] = g.m10 * t0 + g.m11 * t1;
        }
    }
}

void apply_swap(CMat& m, int bit_a, int bit_b, std::uint64_t ctrl_mask,
                std::uint64_t ctrl_value) {
    const int n = m.n;
    const std::uint64_t amask = std::uint64_t{1} << bit_a;
    const std::uint64_t bmask = std::uint64_t{1} << bit_b;
    for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(n); ++r) {
        if (!(r & amask) || (r & bmask)) continue;
        if ((r & ctrl_mask) != ctrl_value) continue;
        cplx* pa = m.row(static_cast<int>(r));
        cplx* pb = m.row(static_cast<int>(r ^ (amask | bmask)));
        for (int c = 0; c < n; ++c) std::swap(pa[c], pb[c]);
    }
}

void apply_phase(CMat& m, std::uint64_t ctrl_mask, std::uint64_t ctrl_value,
                 double phase) {
    const int n = m.n;
    const cplx f{std::cos(phase), std::sin(phase)};
    for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(n); ++r) {
        if ((r & ctrl_mask) != ctrl_value) continue;
        cplx* p = m.row(static_cast<int>(r));
        for (int c = 0; c < n; ++c) p[c] *= f;
    }
}

double frobenius_distance(const CMat& a, const CMat& b) {
    double sum = 0.0;
    const std::size_t total = a.a.size();
    for (std::size_t i = 0; i < total; ++i) {
        cplx d = a.a[i] - b.a[i];
        sum += d.real() * d.real() + d.imag() * d.imag();
    }
    return std::sqrt(sum);
}

void jacobi_rotate(RMat& a, RMat& v, int p, int q, double c, double s) {
    const int n = a.n;
    const double app = a(p, p), aqq = a(q, q), apq = a(p, q);
    a(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
    a(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (int r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        double arp = a(r, p), arq = a(r, q);
        a(r, p) = c * arp - s * arq;
        a(p, r) = a(r, p);
        a(r, q) = s * arp + c * arq;
        a(q, r) = a(r, q);
    }
    for (int r = 0; r < n; ++r) {
        double vrp = v(r, p), vrq = v(r, q);
        v(r, p) = c * vrp - s * vrq;
        v(r, q) = s * vrp + c * vrq;
    }
}

void evolution_from_eigen(const RMat& vectors, const std::vector<double>& values,
                          CMat& out) {
    const int n = vectors.n;
    out = CMat(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            cplx sum{0.0, 0.0};
            for (int m = 0; m < n; ++m) {
                cplx phase{std::cos(values[m]), std::sin(values[m])};
                sum += vectors(j, m) * phase * vectors(k, m);
            }
            out(j, k) = sum;
        }
}

}  // namespace qgc::kern::serial
