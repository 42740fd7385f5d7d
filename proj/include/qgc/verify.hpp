#pragma once

#include <vector>

#include "qgc/cmat.hpp"
#include "qgc/graph.hpp"
#include "qgc/seo.hpp"

namespace qgc {

// Result of diagonalizing a real symmetric matrix: columns of `vectors` are
// orthonormal eigenvectors, `values` the matching eigenvalues, ascending.
struct EigenSystem {
    int n = 0;
    std::vector<double> values;
    RMat vectors;
};

struct ErrorReport {
    double epsilon = 0.0;
    long num_ops = 0;
};

// Cyclic Jacobi sweeps until every off-diagonal entry is below
// 1e-13 * ||H||_F (at most 100 sweeps). Throws on asymmetric input.
EigenSystem jacobi_eigensym(const RMat& h);

// U = V diag(e^{i*values}) V^T, the exact evolution operator of H.
CMat evolution_operator(const RMat& h);

// The unitary of a single gate row on nb qubits. LOOP/NEXT are not gates.
CMat instruction_matrix(const Instruction& ins, int nb);

// U' = G_last ... G_2 G_1 with row 0 acting first; loops are walked in place,
// never unrolled into a longer program.
CMat program_matrix(const Program& p);

double frobenius_distance(const CMat& a, const CMat& b);

// Fitted power-law exponent log(eps2/eps1) / log(g2/g1).
double error_order_estimate(double eps1, double eps2, double g1, double g2);

// Full pipeline: epsilon = || expm(iH) - program product ||_F plus op count.
ErrorReport verify_program(const Program& p, const Hamiltonian& h);

}  // namespace qgc
