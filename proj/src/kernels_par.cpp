// OpenMP versions of the dense kernels. These are the library's default
// execution path; built without OpenMP the pragmas are no-ops and the loops
// run serially.

#include <cmath>
#include <cstdint>
#include <utility>

#include "qgc/kernels.hpp"

namespace qgc::kern::par {

void matmul(const CMat& lhs, const CMat& rhs, CMat& out) {
    const int n = lhs.n;
    out = CMat(n);
    // dot-product form: transpose rhs once so both inner streams are unit
    // stride, and split the accumulator to break the add dependency chain
    CMat rt(n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) rt(j, k) = rhs(k, j);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const cplx* arow = lhs.row(i);
        cplx* dst = out.row(i);
        for (int j = 0; j < n; ++j) {
            const cplx* brow = rt.row(j);
            cplx s0{}, s1{}, s2{}, s3{};
            int k = 0;
            for (; k + 3 < n; k += 4) {
                s0 += arow[k] * brow[k];
                s1 += arow[k + 1] * brow[k + 1];
                s2 += arow[k + 2] * brow[k + 2];
                s3 += arow[k + 3] * brow[k + 3];
            }
            for (; k < n; ++k) s0 += arow[k] * brow[k];
            dst[j] = (s0 + s1) + (s2 + s3);
        }
    }
}

void apply_block_gate(CMat& m, const BlockGate& g) {
    const int n = m.n;
    const std::int64_t half = n >> 1;
    const std::uint64_t tmask = std::uint64_t{1} << g.target;
    const std::uint64_t lo = tmask - 1;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < half; ++i) {
        const std::uint64_t u = static_cast<std::uint64_t>(i);
        const std::uint64_t r0 = ((u & ~lo) << 1) | (u & lo);
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
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < n; ++r) {
        const std::uint64_t u = static_cast<std::uint64_t>(r);
        // each swapped pair is visited through its (a=1, b=0) representative
        if (!(u & amask) || (u & bmask)) continue;
        if ((u & ctrl_mask) != ctrl_value) continue;
        cplx* pa = m.row(static_cast<int>(u));
        cplx* pb = m.row(static_cast<int>(u ^ (amask | bmask)));
        for (int c = 0; c < n; ++c) std::swap(pa[c], pb[c]);
    }
}

void apply_phase(CMat& m, std::uint64_t ctrl_mask, std::uint64_t ctrl_value,
                 double phase) {
    const int n = m.n;
    const cplx f{std::cos(phase), std::sin(phase)};
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < n; ++r) {
        if ((static_cast<std::uint64_t>(r) & ctrl_mask) != ctrl_value) continue;
        cplx* p = m.row(static_cast<int>(r));
        for (int c = 0; c < n; ++c) p[c] *= f;
    }
}

double frobenius_distance(const CMat& a, const CMat& b) {
    const std::int64_t total = static_cast<std::int64_t>(a.a.size());
    double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
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
    // rotations are applied sequentially; only the O(n) row/column update is
    // worth spreading, and only once the matrix is reasonably large
#pragma omp parallel for schedule(static) if (n >= 256)
    for (int r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        double arp = a(r, p), arq = a(r, q);
        a(r, p) = c * arp - s * arq;
        a(p, r) = a(r, p);
        a(r, q) = s * arp + c * arq;
        a(q, r) = a(r, q);
    }
#pragma omp parallel for schedule(static) if (n >= 256)
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
    std::vector<cplx> phases(n);
    for (int m = 0; m < n; ++m) phases[m] = cplx{std::cos(values[m]), std::sin(values[m])};
    // transpose once so the inner accumulation runs along rows
    RMat vt(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) vt(c, r) = vectors(r, c);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) {
        cplx* dst = out.row(j);
        for (int m = 0; m < n; ++m) {
            const cplx w = vectors(j, m) * phases[m];
            const double* vrow = vt.row(m);
            for (int k = 0; k < n; ++k) dst[k] += w * vrow[k];
        }
    }
}

}  // namespace qgc::kern::par
