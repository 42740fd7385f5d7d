#pragma once

#include <vector>

#include "qgc/seo.hpp"
#include "qgc/summary.hpp"

namespace qgc {

// Exact circuit for the even-Gray-position edges: they sum to sigma_x on bit 0,
// so one uncontrolled x-rotation suffices. Always a single row.
std::vector<Instruction> compile_even_part(double theta, int nb);

// Exact circuit for the odd-Gray-position edges: one multi-controlled
// x-rotation per edge (disjoint supports commute). 2^(nb-1) - 1 rows.
std::vector<Instruction> compile_odd_part(double theta, int nb);

// exp(i·H_line) via the even/odd edge split, a Suzuki product formula of
// req.order, and a Trotter loop of req.nt steps.
Program compile_line(const CompileRequest& req);

}  // namespace qgc
