#pragma once

#include <functional>
#include <vector>

#include "qgc/seo.hpp"

namespace qgc {

// Two-generator split: A and B each collect mutually commuting pieces.
enum class Gen { A, B };

// One product-formula factor e^{i·coeff·g·(A or B)}; coeff is a fraction of g.
struct Factor {
    Gen label;
    double coeff;
};

using FactorSequence = std::vector<Factor>;

// Strang for order 2, Suzuki fractal recursion for orders 4 and 6.
// Adjacent factors with equal labels are merged.
FactorSequence suzuki_sequence(int order);

struct TrotterPlan {
    int nt = 1;
    double step_g = 0.0;  // coupling per step, g/nt
    int order = 2;
};

// Maps one product-formula step to instruction rows at the given coupling.
using StepBuilder =
    std::function<std::vector<Instruction>(const FactorSequence&, double step_g)>;

// nt = 1: the step rows alone. nt > 1: the step wrapped in LOOP/NEXT with
// reps = nt; the loop label equals the LOOP row's 0-based row index.
std::vector<Instruction> trotterize(const StepBuilder& build_step, const TrotterPlan& plan);

}  // namespace qgc
