#include "qgc/suzuki.hpp"

#include <cmath>
#include <stdexcept>

namespace qgc {

namespace {

void append_scaled(FactorSequence& dst, const FactorSequence& src, double scale) {
    for (const Factor& f : src) {
        double coeff = f.coeff * scale;
        if (!dst.empty() && dst.back().label == f.label)
            dst.back().coeff += coeff;
        else
            dst.push_back({f.label, coeff});
    }
}

}  // namespace

FactorSequence suzuki_sequence(int order) {
    if (order == 2) return {{Gen::A, 0.5}, {Gen::B, 1.0}, {Gen::A, 0.5}};
    if (order != 4 && order != 6) throw std::invalid_argument("Order must be 2, 4, or 6");

    FactorSequence inner = suzuki_sequence(order - 2);
    double p = 1.0 / (4.0 - std::pow(4.0, 1.0 / (order - 1)));
    FactorSequence out;
    append_scaled(out, inner, p);
    append_scaled(out, inner, p);
    append_scaled(out, inner, 1.0 - 4.0 * p);
    append_scaled(out, inner, p);
    append_scaled(out, inner, p);
    return out;
}

std::vector<Instruction> trotterize(const StepBuilder& build_step, const TrotterPlan& plan) {
    if (plan.nt < 1) throw std::invalid_argument("Number of Trots must be at least 1");
    if (!std::isfinite(plan.step_g))
        throw std::invalid_argument("Coupling Constant must be a finite number");

    std::vector<Instruction> step = build_step(suzuki_sequence(plan.order), plan.step_g);
    if (plan.nt == 1) return step;

    std::vector<Instruction> rows;
    rows.reserve(step.size() + 2);
    rows.push_back(Instruction::loop(0, plan.nt));
    rows.insert(rows.end(), std::make_move_iterator(step.begin()),
                std::make_move_iterator(step.end()));
    rows.push_back(Instruction::next(0));
    return rows;
}

}  // namespace qgc
