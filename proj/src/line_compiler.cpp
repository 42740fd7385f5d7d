#include "qgc/line_compiler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgc/graph.hpp"
#include "qgc/suzuki.hpp"

namespace qgc {

namespace {

double rot_degrees(double theta) { return 2.0 * theta * 180.0 / std::numbers::pi; }

void require_part_args(double theta, int nb) {
    if (nb < 2) throw std::invalid_argument("Number of Qubits must be at least 2");
    if (!std::isfinite(theta))
        throw std::invalid_argument("Coupling Constant must be a finite number");
}

}  // namespace

std::vector<Instruction> compile_even_part(double theta, int nb) {
    require_part_args(theta, nb);
    return {Instruction::rot(Op::RotX, rot_degrees(theta), 0)};
}

std::vector<Instruction> compile_odd_part(double theta, int nb) {
    require_part_args(theta, nb);
    std::vector<LineEdge> edges = line_edges(nb);
    std::vector<Instruction> rows;
    for (size_t j = 1; j < edges.size(); j += 2) {
        const LineEdge& e = edges[j];
        std::vector<Control> ctrls;
        for (int bit = nb - 1; bit >= 0; --bit)
            if (bit != e.flipped_bit) ctrls.push_back({bit, ((e.a >> bit) & 1) != 0});
        rows.push_back(
            Instruction::rot(Op::RotX, rot_degrees(theta), e.flipped_bit, std::move(ctrls)));
    }
    return rows;
}

Program compile_line(const CompileRequest& req) {
    if (std::optional<std::string> problem = request_problem(req, false))
        throw std::invalid_argument(*problem);

    TrotterPlan plan{req.nt, req.g / req.nt, req.order};
    int nb = req.nb;
    Program p;
    p.nb = nb;
    p.rows = trotterize(
        [nb](const FactorSequence& seq, double step_g) {
            std::vector<Instruction> rows;
            for (const Factor& f : seq) {
                double theta = f.coeff * step_g;
                std::vector<Instruction> part = f.label == Gen::A
                                                    ? compile_even_part(theta, nb)
                                                    : compile_odd_part(theta, nb);
                for (Instruction& ins : part) rows.push_back(std::move(ins));
            }
            return rows;
        },
        plan);
    return p;
}

}  // namespace qgc
