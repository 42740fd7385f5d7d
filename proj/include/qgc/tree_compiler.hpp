#pragma once

#include <vector>

#include "qgc/seo.hpp"
#include "qgc/summary.hpp"

namespace qgc {

// Exact circuit for exp(i·theta·H_level), the tree Hamiltonian slice coupling
// level `level` to its children: a conjugation ladder (controlled Hadamard,
// bit-shift swaps, CNOT), one controlled x-rotation with effective coupling
// sqrt(2)·theta, and the mirrored ladder. 2·level + 5 rows.
std::vector<Instruction> compile_level(int level, double theta, int nb);

// exp(i·H_tree) via even/odd level grouping, a Suzuki product formula of
// req.order, and a Trotter loop of req.nt steps.
Program compile_tree(const CompileRequest& req);

}  // namespace qgc
