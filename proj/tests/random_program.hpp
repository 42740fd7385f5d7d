#pragma once

// Random valid programs for round-trip tests. Angles are drawn on the
// 1e-6 grid so the 6-decimal English formatting reproduces them exactly.

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "qgc/seo.hpp"

inline double grid_angle(std::mt19937& rng) {
    std::uniform_int_distribution<long> micro(-360'000'000L, 360'000'000L);
    return static_cast<double>(micro(rng)) / 1e6;
}

// Random subset of the bits not already used by the gate, in any order; the
// instruction factories re-sort them.
inline std::vector<qgc::Control> random_controls(std::mt19937& rng,
                                                 std::vector<int> free_bits) {
    std::shuffle(free_bits.begin(), free_bits.end(), rng);
    int count = std::uniform_int_distribution<int>(
        0, static_cast<int>(free_bits.size()))(rng);
    std::vector<qgc::Control> ctrls;
    for (int i = 0; i < count; ++i)
        ctrls.push_back({free_bits[i], std::uniform_int_distribution<int>(0, 1)(rng) == 1});
    return ctrls;
}

inline qgc::Instruction random_gate(std::mt19937& rng, int nb) {
    auto bit = [&] { return std::uniform_int_distribution<int>(0, nb - 1)(rng); };
    auto free_bits = [nb](std::initializer_list<int> used) {
        std::vector<int> out;
        for (int b = 0; b < nb; ++b)
            if (std::find(used.begin(), used.end(), b) == used.end()) out.push_back(b);
        return out;
    };

    using qgc::Instruction;
    using qgc::Op;
    while (true) {
        switch (std::uniform_int_distribution<int>(0, 9)(rng)) {
            case 0: {
                if (nb < 2) continue;  // SWAP needs two distinct bits
                int a = bit(), b = bit();
                while (b == a) b = bit();
                return Instruction::swap(a, b, random_controls(rng, free_bits({a, b})));
            }
            case 1:
                return Instruction::phas(grid_angle(rng), random_controls(rng, free_bits({})));
            case 2: {
                int t = bit();
                return Instruction::p0ph(grid_angle(rng), t,
                                         random_controls(rng, free_bits({t})));
            }
            case 3: {
                int t = bit();
                return Instruction::p1ph(grid_angle(rng), t,
                                         random_controls(rng, free_bits({t})));
            }
            case 4:
            case 5: {
                Op op = std::array{Op::SigX, Op::SigY, Op::SigZ, Op::Had2}[
                    std::uniform_int_distribution<int>(0, 3)(rng)];
                int t = bit();
                return Instruction::gate(op, t, random_controls(rng, free_bits({t})));
            }
            case 6:
            case 7:
            case 8: {
                Op op = std::array{Op::RotX, Op::RotY, Op::RotZ}[
                    std::uniform_int_distribution<int>(0, 2)(rng)];
                int t = bit();
                return Instruction::rot(op, grid_angle(rng), t,
                                        random_controls(rng, free_bits({t})));
            }
            default: {
                int t = bit();
                return Instruction::rotn(grid_angle(rng), grid_angle(rng), grid_angle(rng),
                                         t, random_controls(rng, free_bits({t})));
            }
        }
    }
}

inline qgc::Program random_program(std::mt19937& rng, int max_blocks = 8) {
    qgc::Program p;
    p.nb = std::uniform_int_distribution<int>(1, 6)(rng);

    int blocks = std::uniform_int_distribution<int>(0, max_blocks)(rng);
    for (int i = 0; i < blocks; ++i) {
        bool looped = std::uniform_int_distribution<int>(0, 4)(rng) == 0;
        if (looped) {
            int label = static_cast<int>(p.rows.size());
            int reps = std::uniform_int_distribution<int>(1, 5)(rng);
            p.rows.push_back(qgc::Instruction::loop(label, reps));
            int body = std::uniform_int_distribution<int>(1, 3)(rng);
            for (int k = 0; k < body; ++k) p.rows.push_back(random_gate(rng, p.nb));
            p.rows.push_back(qgc::Instruction::next(label));
        } else {
            p.rows.push_back(random_gate(rng, p.nb));
        }
    }
    return p;
}
