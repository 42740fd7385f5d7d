#pragma once

#include <cstdint>
#include <vector>

#include "qgc/cmat.hpp"

// Dense inner-loop kernels behind the verifier. Every kernel exists twice:
// kern::serial holds the plain reference loops, kern::par the OpenMP versions.
// The library always runs the par path (which degrades to serial when built
// without OpenMP); the serial path is kept as the reference the tests and the
// benchmark compare against.

namespace qgc::kern {

// One-target gate: a 2x2 block applied to the target bit wherever the control
// pattern matches. ctrl_mask never contains the target bit.
struct BlockGate {
    int target = 0;
    std::uint64_t ctrl_mask = 0;
    std::uint64_t ctrl_value = 0;
    cplx m00{1.0, 0.0}, m01{0.0, 0.0}, m10{0.0, 0.0}, m11{1.0, 0.0};
};

namespace serial {

// out = lhs * rhs
void matmul(const CMat& lhs, const CMat& rhs, CMat& out);

// m <- G * m for a controlled one-target gate G.
void apply_block_gate(CMat& m, const BlockGate& gate);

// m <- E(bit_a, bit_b)^controls * m
void apply_swap(CMat& m, int bit_a, int bit_b, std::uint64_t ctrl_mask,
                std::uint64_t ctrl_value);

// m <- diag(e^{i*phase} on matching states, 1 elsewhere) * m
void apply_phase(CMat& m, std::uint64_t ctrl_mask, std::uint64_t ctrl_value,
                 double phase);

double frobenius_distance(const CMat& a, const CMat& b);

// One Jacobi rotation in the (p, q) plane applied to the symmetric matrix a
// (rows and columns) and accumulated into the column basis v.
void jacobi_rotate(RMat& a, RMat& v, int p, int q, double c, double s);

// out(j,k) = sum_m vectors(j,m) * e^{i*values[m]} * vectors(k,m)
void evolution_from_eigen(const RMat& vectors, const std::vector<double>& values,
                          CMat& out);

}  // namespace serial

namespace par {

void matmul(const CMat& lhs, const CMat& rhs, CMat& out);
void apply_block_gate(CMat& m, const BlockGate& gate);
void apply_swap(CMat& m, int bit_a, int bit_b, std::uint64_t ctrl_mask,
                std::uint64_t ctrl_value);
void apply_phase(CMat& m, std::uint64_t ctrl_mask, std::uint64_t ctrl_value,
                 double phase);
double frobenius_distance(const CMat& a, const CMat& b);
void jacobi_rotate(RMat& a, RMat& v, int p, int q, double c, double s);
void evolution_from_eigen(const RMat& vectors, const std::vector<double>& values,
                          CMat& out);

}  // namespace par

// Default path used by the library.
inline void matmul(const CMat& a, const CMat& b, CMat& out) { par::matmul(a, b, out); }
inline void apply_block_gate(CMat& m, const BlockGate& g) { par::apply_block_gate(m, g); }
inline void apply_swap(CMat& m, int a, int b, std::uint64_t cm, std::uint64_t cv) {
    par::apply_swap(m, a, b, cm, cv);
}
inline void apply_phase(CMat& m, std::uint64_t cm, std::uint64_t cv, double ph) {
    par::apply_phase(m, cm, cv, ph);
}
inline double frobenius_distance(const CMat& a, const CMat& b) {
    return par::frobenius_distance(a, b);
}
inline void jacobi_rotate(RMat& a, RMat& v, int p, int q, double c, double s) {
    par::jacobi_rotate(a, v, p, q, c, s);
}
inline void evolution_from_eigen(const RMat& vec, const std::vector<double>& val, CMat& out) {
    par::evolution_from_eigen(vec, val, out);
}

}  // namespace qgc::kern
