#include "qgc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qgc/kernels.hpp"

namespace qgc {

namespace {

double frobenius_norm(const RMat& m) {
    double sum = 0.0;
    for (double x : m.a) sum += x * x;
    return std::sqrt(sum);
}

double max_off_diagonal(const RMat& m) {
    double worst = 0.0;
    for (int r = 0; r < m.n; ++r)
        for (int c = r + 1; c < m.n; ++c) worst = std::max(worst, std::abs(m(r, c)));
    return worst;
}

}  // namespace

EigenSystem jacobi_eigensym(const RMat& h) {
    if (h.max_asymmetry() > 1e-12)
        throw std::invalid_argument("eigensolver needs a symmetric matrix");

    int n = h.n;
    RMat a = h;
    RMat v = RMat::identity(n);
    double stop = 1e-13 * frobenius_norm(h);

    int sweep = 0;
    for (; sweep < 100 && max_off_diagonal(a) > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0.0) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                kern::jacobi_rotate(a, v, p, q, c, s);
            }
        }
    }
    if (max_off_diagonal(a) > stop && sweep == 100)
        throw std::runtime_error("eigensolver did not converge in 100 sweeps");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](int x, int y) { return a(x, x) < a(y, y); });

    EigenSystem sys;
    sys.n = n;
    sys.values.resize(n);
    sys.vectors = RMat(n);
    for (int k = 0; k < n; ++k) {
        sys.values[k] = a(order[k], order[k]);
        for (int r = 0; r < n; ++r) sys.vectors(r, k) = v(r, order[k]);
    }
    return sys;
}

CMat evolution_operator(const RMat& h) {
    EigenSystem sys = jacobi_eigensym(h);
    CMat u(h.n);
    kern::evolution_from_eigen(sys.vectors, sys.values, u);
    return u;
}

namespace {

void controls_to_mask(const std::vector<Control>& ctrls, std::uint64_t& mask,
                      std::uint64_t& value) {
    mask = 0;
    value = 0;
    for (const Control& c : ctrls) {
        mask |= std::uint64_t{1} << c.bit;
        if (c.on) value |= std::uint64_t{1} << c.bit;
    }
}

// exp(i * (ax, ay, az) . sigma) as a 2x2 block.
void rotation_block(double ax, double ay, double az, kern::BlockGate& g) {
    double r = std::sqrt(ax * ax + ay * ay + az * az);
    if (r == 0.0) {
        g.m00 = g.m11 = cplx{1.0, 0.0};
        g.m01 = g.m10 = cplx{0.0, 0.0};
        return;
    }
    double co = std::cos(r), si = std::sin(r);
    double nx = ax / r, ny = ay / r, nz = az / r;
    g.m00 = cplx{co, si * nz};
    g.m11 = cplx{co, -si * nz};
    g.m01 = cplx{si * ny, si * nx};
    g.m10 = cplx{-si * ny, si * nx};
}

constexpr double half_angle = std::numbers::pi / 360.0;  // degrees -> half radians

// Applies one gate row to m in place (left multiplication).
void apply_instruction(CMat& m, const Instruction& ins) {
    std::uint64_t mask = 0, value = 0;
    controls_to_mask(ins.controls, mask, value);

    kern::BlockGate g;
    g.target = ins.target;
    g.ctrl_mask = mask;
    g.ctrl_value = value;
    const double rsqrt2 = 1.0 / std::numbers::sqrt2;

    switch (ins.op) {
        case Op::Swap:
            kern::apply_swap(m, ins.target, ins.partner, mask, value);
            return;
        case Op::Phas:
            kern::apply_phase(m, mask, value, ins.angle[0]);
            return;
        case Op::P0Ph:
            kern::apply_phase(m, mask | (std::uint64_t{1} << ins.target), value,
                              ins.angle[0]);
            return;
        case Op::P1Ph:
            kern::apply_phase(m, mask | (std::uint64_t{1} << ins.target),
                              value | (std::uint64_t{1} << ins.target), ins.angle[0]);
            return;
        case Op::SigX:
            g.m00 = g.m11 = cplx{0.0, 0.0};
            g.m01 = g.m10 = cplx{1.0, 0.0};
            break;
        case Op::SigY:
            g.m00 = g.m11 = cplx{0.0, 0.0};
            g.m01 = cplx{0.0, -1.0};
            g.m10 = cplx{0.0, 1.0};
            break;
        case Op::SigZ:
            g.m00 = cplx{1.0, 0.0};
            g.m11 = cplx{-1.0, 0.0};
            break;
        case Op::Had2:
            g.m00 = g.m01 = g.m10 = cplx{rsqrt2, 0.0};
            g.m11 = cplx{-rsqrt2, 0.0};
            break;
        case Op::RotX:
            rotation_block(ins.angle[0] * half_angle, 0.0, 0.0, g);
            break;
        case Op::RotY:
            rotation_block(0.0, ins.angle[0] * half_angle, 0.0, g);
            break;
        case Op::RotZ:
            rotation_block(0.0, 0.0, ins.angle[0] * half_angle, g);
            break;
        case Op::RotN:
            rotation_block(ins.angle[0] * half_angle, ins.angle[1] * half_angle,
                           ins.angle[2] * half_angle, g);
            break;
        case Op::Loop:
        case Op::Next:
            throw std::invalid_argument("LOOP/NEXT have no matrix");
    }
    kern::apply_block_gate(m, g);
}

}  // namespace

CMat instruction_matrix(const Instruction& ins, int nb) {
    if (!ins.is_gate()) throw std::invalid_argument("LOOP/NEXT have no matrix");
    Program one;
    one.nb = nb;
    one.rows.push_back(ins);
    require_valid(one);
    CMat m = CMat::identity(1 << nb);
    apply_instruction(m, ins);
    return m;
}

CMat program_matrix(const Program& p) {
    require_valid(p);
    CMat u = CMat::identity(1 << p.nb);

    struct OpenLoop {
        int start;       // row index of the LOOP row
        int remaining;   // trips still to run, counting the current one
    };
    std::vector<OpenLoop> stack;

    int i = 0;
    int total = static_cast<int>(p.rows.size());
    while (i < total) {
        const Instruction& ins = p.rows[i];
        if (ins.op == Op::Loop) {
            stack.push_back({i, ins.reps});
            ++i;
        } else if (ins.op == Op::Next) {
            if (--stack.back().remaining > 0) {
                i = stack.back().start + 1;
            } else {
                stack.pop_back();
                ++i;
            }
        } else {
            apply_instruction(u, ins);
            ++i;
        }
    }
    return u;
}

double frobenius_distance(const CMat& a, const CMat& b) {
    if (a.n != b.n) throw std::invalid_argument("matrix dimensions differ");
    return kern::frobenius_distance(a, b);
}

double error_order_estimate(double eps1, double eps2, double g1, double g2) {
    if (eps1 <= 0 || eps2 <= 0 || g1 <= 0 || g2 <= 0)
        throw std::invalid_argument("error-order estimate needs positive arguments");
    if (g1 == g2) throw std::invalid_argument("error-order estimate needs two couplings");
    return std::log(eps2 / eps1) / std::log(g2 / g1);
}

ErrorReport verify_program(const Program& p, const Hamiltonian& h) {
    ErrorReport report;
    report.num_ops = count_elementary_ops(p);
    CMat exact = evolution_operator(h.matrix);
    CMat circuit = program_matrix(p);
    report.epsilon = frobenius_distance(exact, circuit);
    return report;
}

}  // namespace qgc
