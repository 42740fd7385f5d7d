#include "qgc/seo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgc {

namespace {

struct OpName {
    Op op;
    const char* name;
};

constexpr OpName op_names[] = {
    {Op::Loop, "LOOP"}, {Op::Next, "NEXT"}, {Op::Swap, "SWAP"}, {Op::Phas, "PHAS"},
    {Op::P0Ph, "P0PH"}, {Op::P1Ph, "P1PH"}, {Op::SigX, "SIGX"}, {Op::SigY, "SIGY"},
    {Op::SigZ, "SIGZ"}, {Op::Had2, "HAD2"}, {Op::RotX, "ROTX"}, {Op::RotY, "ROTY"},
    {Op::RotZ, "ROTZ"}, {Op::RotN, "ROTN"},
};

std::vector<Control> sorted_controls(std::vector<Control> ctrls) {
    std::sort(ctrls.begin(), ctrls.end(),
              [](const Control& a, const Control& b) { return a.bit > b.bit; });
    return ctrls;
}

}  // namespace

const char* mnemonic(Op op) {
    for (const auto& [o, name] : op_names)
        if (o == op) return name;
    return "????";
}

std::optional<Op> op_from_mnemonic(std::string_view token) {
    for (const auto& [o, name] : op_names)
        if (token == name) return o;
    return std::nullopt;
}

Instruction Instruction::loop(int label, int reps) {
    Instruction ins;
    ins.op = Op::Loop;
    ins.target = label;
    ins.reps = reps;
    return ins;
}

Instruction Instruction::next(int label) {
    Instruction ins;
    ins.op = Op::Next;
    ins.target = label;
    return ins;
}

Instruction Instruction::swap(int a, int b, std::vector<Control> ctrls) {
    Instruction ins;
    ins.op = Op::Swap;
    ins.target = a;
    ins.partner = b;
    ins.controls = sorted_controls(std::move(ctrls));
    return ins;
}

Instruction Instruction::phas(double phase, std::vector<Control> ctrls) {
    Instruction ins;
    ins.op = Op::Phas;
    ins.angle[0] = phase;
    ins.controls = sorted_controls(std::move(ctrls));
    return ins;
}

Instruction Instruction::p0ph(double phase, int target, std::vector<Control> ctrls) {
    Instruction ins;
    ins.op = Op::P0Ph;
    ins.angle[0] = phase;
    ins.target = target;
    ins.controls = sorted_controls(std::move(ctrls));
    return ins;
}

Instruction Instruction::p1ph(double phase, int target, std::vector<Control> ctrls) {
    Instruction ins = p0ph(phase, target, std::move(ctrls));
    ins.op = Op::P1Ph;
    return ins;
}

Instruction Instruction::gate(Op op, int target, std::vector<Control> ctrls) {
    Instruction ins;
    ins.op = op;
    ins.target = target;
    ins.controls = sorted_controls(std::move(ctrls));
    return ins;
}

Instruction Instruction::rot(Op op, double deg, int target, std::vector<Control> ctrls) {
    Instruction ins = gate(op, target, std::move(ctrls));
    ins.angle[0] = deg;
    return ins;
}

Instruction Instruction::rotn(double ax_deg, double ay_deg, double az_deg, int target,
                              std::vector<Control> ctrls) {
    Instruction ins = gate(Op::RotN, target, std::move(ctrls));
    ins.angle = {ax_deg, ay_deg, az_deg};
    return ins;
}

std::vector<Diagnostic> validate(const Program& p) {
    std::vector<Diagnostic> out;
    auto bad = [&](int row, std::string text) { out.push_back({row, std::move(text)}); };

    if (p.nb < 1) bad(-1, "program needs at least one qubit");

    // label -> row of the still-open LOOP
    std::vector<std::pair<int, int>> open_loops;
    for (int r = 0; r < static_cast<int>(p.rows.size()); ++r) {
        const Instruction& ins = p.rows[r];
        auto bit_ok = [&](int bit) { return bit >= 0 && bit < p.nb; };

        if (ins.op == Op::Loop) {
            if (ins.reps < 1) bad(r, "LOOP needs at least one repetition");
            for (const auto& [label, row] : open_loops)
                if (label == ins.target) bad(r, "LOOP label already open");
            open_loops.emplace_back(ins.target, r);
            continue;
        }
        if (ins.op == Op::Next) {
            if (open_loops.empty() || open_loops.back().first != ins.target)
                bad(r, "NEXT without matching LOOP");
            else
                open_loops.pop_back();
            continue;
        }

        if (ins.op != Op::Phas && !bit_ok(ins.target)) bad(r, "target bit out of range");
        if (ins.op == Op::Swap) {
            if (!bit_ok(ins.partner)) bad(r, "swap bit out of range");
            if (ins.partner == ins.target) bad(r, "SWAP bits must differ");
        }

        std::vector<bool> used(p.nb, false);
        if (ins.op != Op::Phas && bit_ok(ins.target)) used[ins.target] = true;
        if (ins.op == Op::Swap && bit_ok(ins.partner)) used[ins.partner] = true;
        for (const Control& c : ins.controls) {
            if (!bit_ok(c.bit)) {
                bad(r, "control bit out of range");
                continue;
            }
            if (used[c.bit]) bad(r, "bit used twice in one row");
            used[c.bit] = true;
        }
        if (!std::is_sorted(ins.controls.begin(), ins.controls.end(),
                            [](const Control& a, const Control& b) { return a.bit > b.bit; }))
            bad(r, "controls must be listed by descending bit");

        for (double a : ins.angle)
            if (!std::isfinite(a)) bad(r, "angle must be finite");
    }
    for (auto it = open_loops.rbegin(); it != open_loops.rend(); ++it)
        bad(it->second, "LOOP never closed");
    return out;
}

void require_valid(const Program& p) {
    std::vector<Diagnostic> diags = validate(p);
    if (diags.empty()) return;
    std::ostringstream msg;
    msg << "invalid program:";
    for (const Diagnostic& d : diags) msg << "\n  row " << d.row << ": " << d.text;
    throw std::invalid_argument(msg.str());
}

long count_elementary_ops(const Program& p) {
    long total = 0;
    std::vector<long> scale_stack{1};
    for (const Instruction& ins : p.rows) {
        if (ins.op == Op::Loop) {
            scale_stack.push_back(scale_stack.back() * ins.reps);
        } else if (ins.op == Op::Next) {
            if (scale_stack.size() > 1) scale_stack.pop_back();
        } else {
            total += scale_stack.back();
        }
    }
    return total;
}

std::vector<Instruction> reverse_adjoint_swaps(std::vector<Instruction> rows) {
    for (const Instruction& ins : rows) {
        switch (ins.op) {
            case Op::Swap:
            case Op::SigX:
            case Op::SigY:
            case Op::SigZ:
            case Op::Had2:
                break;
            default:
                throw std::invalid_argument("reverse_adjoint_swaps: row is not self-inverse");
        }
    }
    std::reverse(rows.begin(), rows.end());
    return rows;
}

}  // namespace qgc
