#include "qgc/tree_compiler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgc/suzuki.hpp"

namespace qgc {

namespace {

// Controls pinning all bits above the level's pair (level, level+1) to 0;
// empty for the top level.
std::vector<Control> high_idle(int level, int nb) {
    std::vector<Control> ctrls;
    for (int bit = nb - 1; bit >= level + 2; --bit) ctrls.push_back({bit, false});
    return ctrls;
}

std::vector<Control> with(std::vector<Control> ctrls, Control extra) {
    ctrls.push_back(extra);
    return ctrls;
}

}  // namespace

std::vector<Instruction> compile_level(int level, double theta, int nb) {
    if (nb < 2) throw std::invalid_argument("Number of Qubits must be at least 2");
    if (level < 0 || level > nb - 2)
        throw std::invalid_argument("level must lie in [0, Number of Qubits - 2]");
    if (!std::isfinite(theta))
        throw std::invalid_argument("Coupling Constant must be a finite number");

    std::vector<Control> idle = high_idle(level, nb);
    std::vector<Control> on_child = with(idle, {level + 1, true});

    // Maps the level slice onto sqrt(2)·sigma_x(level+1) restricted to the
    // subspace selected by bit `level`; the mirror undoes the mapping.
    std::vector<Instruction> enter;
    enter.push_back(Instruction::gate(Op::Had2, 0, on_child));
    for (int bit = 0; bit < level; ++bit)
        enter.push_back(Instruction::swap(bit, bit + 1, on_child));
    enter.push_back(Instruction::gate(Op::SigX, level, on_child));

    double deg = 2.0 * std::sqrt(2.0) * theta * 180.0 / std::numbers::pi;
    Instruction core = Instruction::rot(Op::RotX, deg, level + 1, with(idle, {level, true}));

    std::vector<Instruction> rows = enter;
    rows.push_back(core);
    for (Instruction& ins : reverse_adjoint_swaps(std::move(enter)))
        rows.push_back(std::move(ins));
    return rows;
}

Program compile_tree(const CompileRequest& req) {
    if (std::optional<std::string> problem = request_problem(req, false))
        throw std::invalid_argument(*problem);

    TrotterPlan plan{req.nt, req.g / req.nt, req.order};
    Program p;
    p.nb = req.nb;

    if (req.nb == 2) {
        // one level, one generator: its exact circuit needs no product formula
        p.rows = trotterize(
            [](const FactorSequence&, double step_g) { return compile_level(0, step_g, 2); },
            plan);
        return p;
    }

    int nb = req.nb;
    p.rows = trotterize(
        [nb](const FactorSequence& seq, double step_g) {
            std::vector<Instruction> rows;
            for (const Factor& f : seq) {
                double theta = f.coeff * step_g;
                // generator A: even levels; B: odd levels (disjoint supports)
                for (int level = f.label == Gen::A ? 0 : 1; level <= nb - 2; level += 2)
                    for (Instruction& ins : compile_level(level, theta, nb))
                        rows.push_back(std::move(ins));
            }
            return rows;
        },
        plan);
    return p;
}

}  // namespace qgc
