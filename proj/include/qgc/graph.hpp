#pragma once

#include <utility>
#include <vector>

#include "qgc/cmat.hpp"

namespace qgc {

// Balanced binary tree on 2^nb - 1 nodes plus the unconnected dud node at
// state 0. Nodes are computational-basis states; node p at level lam has
// children 2p and 2p+1.
struct TreeGraph {
    int nb = 0;
    int levels = 0;      // nb - 1
    int num_states = 0;  // 2^nb
    int num_leaves = 0;  // 2^(nb-1)
    std::vector<std::pair<int, int>> edges;  // (parent, child)
};

struct LineEdge {
    int a = 0;
    int b = 0;
    int flipped_bit = 0;
};

// Open string over all 2^nb states, adjacent in Gray-code order.
struct LineGraph {
    int nb = 0;
    std::vector<int> gray;  // gray[j] = j-th state in Gray ordering
    std::vector<LineEdge> edges;
};

struct Hamiltonian {
    int nb = 0;
    double g = 0.0;
    RMat matrix;
};

// j-th state of the reflected Gray sequence on nb bits.
int gray_code(int j, int nb);

std::vector<std::pair<int, int>> tree_edges(int nb);
std::vector<LineEdge> line_edges(int nb);

TreeGraph make_tree_graph(int nb);
LineGraph make_line_graph(int nb);

Hamiltonian build_tree_hamiltonian(int nb, double g);
Hamiltonian build_line_hamiltonian(int nb, double g);

// Slices used by the compilers and their exactness checks: the edges between
// tree level `level` and its children, and the even/odd Gray-position halves
// of the line graph.
Hamiltonian tree_level_hamiltonian(int nb, int level, double g);
Hamiltonian line_part_hamiltonian(int nb, bool odd, double g);

}  // namespace qgc
