#include "qgc/graph.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qgc {

namespace {

void require_nb(int nb) {
    if (nb < 2) throw std::invalid_argument("Number of Qubits must be at least 2");
}

void require_g(double g) {
    if (!std::isfinite(g))
        throw std::invalid_argument("Coupling Constant must be a finite number");
}

}  // namespace

int gray_code(int j, int nb) {
    require_nb(nb);
    if (j < 0 || j >= (1 << nb))
        throw std::invalid_argument("Gray position " + std::to_string(j) +
                                    " out of range for " + std::to_string(nb) + " qubits");
    return j ^ (j >> 1);
}

std::vector<std::pair<int, int>> tree_edges(int nb) {
    require_nb(nb);
    std::vector<std::pair<int, int>> edges;
    edges.reserve((1 << nb) - 2);
    for (int p = 1; p < (1 << (nb - 1)); ++p) {
        edges.emplace_back(p, 2 * p);
        edges.emplace_back(p, 2 * p + 1);
    }
    return edges;
}

std::vector<LineEdge> line_edges(int nb) {
    require_nb(nb);
    std::vector<LineEdge> edges;
    edges.reserve((1 << nb) - 1);
    for (int j = 0; j + 1 < (1 << nb); ++j) {
        int a = gray_code(j, nb);
        int b = gray_code(j + 1, nb);
        int bit = std::countr_zero(static_cast<unsigned>(a ^ b));
        edges.push_back({a, b, bit});
    }
    return edges;
}

TreeGraph make_tree_graph(int nb) {
    require_nb(nb);
    TreeGraph t;
    t.nb = nb;
    t.levels = nb - 1;
    t.num_states = 1 << nb;
    t.num_leaves = 1 << (nb - 1);
    t.edges = tree_edges(nb);
    return t;
}

LineGraph make_line_graph(int nb) {
    require_nb(nb);
    LineGraph l;
    l.nb = nb;
    l.gray.resize(1 << nb);
    for (int j = 0; j < (1 << nb); ++j) l.gray[j] = gray_code(j, nb);
    l.edges = line_edges(nb);
    return l;
}

namespace {

Hamiltonian from_edges(int nb, double g, const std::vector<std::pair<int, int>>& edges) {
    Hamiltonian h;
    h.nb = nb;
    h.g = g;
    h.matrix = RMat(1 << nb);
    for (auto [a, b] : edges) {
        h.matrix(a, b) = g;
        h.matrix(b, a) = g;
    }
    return h;
}

}  // namespace

Hamiltonian build_tree_hamiltonian(int nb, double g) {
    require_nb(nb);
    require_g(g);
    return from_edges(nb, g, tree_edges(nb));
}

Hamiltonian build_line_hamiltonian(int nb, double g) {
    require_nb(nb);
    require_g(g);
    std::vector<std::pair<int, int>> edges;
    for (const LineEdge& e : line_edges(nb)) edges.emplace_back(e.a, e.b);
    return from_edges(nb, g, edges);
}

Hamiltonian tree_level_hamiltonian(int nb, int level, double g) {
    require_nb(nb);
    require_g(g);
    if (level < 0 || level > nb - 2)
        throw std::invalid_argument("tree level " + std::to_string(level) +
                                    " out of range for " + std::to_string(nb) + " qubits");
    std::vector<std::pair<int, int>> edges;
    for (int p = 1 << level; p < (1 << (level + 1)); ++p) {
        edges.emplace_back(p, 2 * p);
        edges.emplace_back(p, 2 * p + 1);
    }
    return from_edges(nb, g, edges);
}

Hamiltonian line_part_hamiltonian(int nb, bool odd, double g) {
    require_nb(nb);
    require_g(g);
    std::vector<std::pair<int, int>> edges;
    auto all = line_edges(nb);
    for (std::size_t j = odd ? 1 : 0; j < all.size(); j += 2)
        edges.emplace_back(all[j].a, all[j].b);
    return from_edges(nb, g, edges);
}

}  // namespace qgc
