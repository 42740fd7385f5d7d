#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qgc {

// Elementary-operation kinds. LOOP/NEXT are circuit structure, not gates.
enum class Op {
    Loop,
    Next,
    Swap,
    Phas,
    P0Ph,
    P1Ph,
    SigX,
    SigY,
    SigZ,
    Had2,
    RotX,
    RotY,
    RotZ,
    RotN,
};

const char* mnemonic(Op op);
std::optional<Op> op_from_mnemonic(std::string_view token);

// One control: the gate fires only where bit reads 1 (on) or 0 (off).
struct Control {
    int bit = 0;
    bool on = true;

    bool operator==(const Control&) const = default;
};

struct Instruction {
    Op op = Op::SigX;
    int target = -1;   // target bit; loop label for Loop/Next; first Swap bit
    int partner = -1;  // second Swap bit
    int reps = 0;      // Loop only
    std::array<double, 3> angle{};  // [0] for one-angle ops; all three for RotN
    std::vector<Control> controls;  // kept sorted by descending bit

    static Instruction loop(int label, int reps);
    static Instruction next(int label);
    static Instruction swap(int a, int b, std::vector<Control> ctrls = {});
    static Instruction phas(double phase, std::vector<Control> ctrls = {});
    static Instruction p0ph(double phase, int target, std::vector<Control> ctrls = {});
    static Instruction p1ph(double phase, int target, std::vector<Control> ctrls = {});
    static Instruction gate(Op op, int target, std::vector<Control> ctrls = {});
    static Instruction rot(Op op, double deg, int target, std::vector<Control> ctrls = {});
    static Instruction rotn(double ax_deg, double ay_deg, double az_deg, int target,
                            std::vector<Control> ctrls = {});

    bool is_gate() const { return op != Op::Loop && op != Op::Next; }
};

// Time-ascending rows; row 0 acts first.
struct Program {
    int nb = 0;
    std::vector<Instruction> rows;
};

struct Diagnostic {
    int row = -1;
    std::string text;
};

// All invariant violations; empty means the program is well formed.
std::vector<Diagnostic> validate(const Program& p);

// Throws std::invalid_argument listing the diagnostics when p is invalid.
void require_valid(const Program& p);

// LOOP/NEXT rows are not counted; rows inside a loop count reps times.
long count_elementary_ops(const Program& p);

// Reverses a row list whose product is its own adjoint term by term. Only
// self-inverse kinds (SWAP, SIGX, SIGY, SIGZ, HAD2) are allowed.
std::vector<Instruction> reverse_adjoint_swaps(std::vector<Instruction> rows);

}  // namespace qgc
