#pragma once

#include "retract/graph.hpp"
#include "retract/structure.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace retract {

enum class Loops
{
    None,
    All
};

auto make_path(std::size_t n, Loops loops) -> Graph;
auto make_cycle(std::size_t n, Loops loops) -> Graph;
auto make_complete(std::size_t n, Loops loops) -> Graph;
auto make_complete_bipartite(std::size_t a, std::size_t b) -> Graph;
// Irreflexive star with k leaves; vertex 0 is the centre.
auto make_star(std::size_t k) -> Graph;

struct XGraphSpec
{
    unsigned k1 = 0, k2 = 0, k3 = 0;
};

// Looped centre b = 0; unlooped leaves 1..k1; looped leaves k1+1..k1+k2;
// then for each triangle j the looped pair x_j, y_j (consecutive ids).
auto make_x_graph(const XGraphSpec & spec) -> Graph;
auto make_x_graph(unsigned k1, unsigned k2, unsigned k3) -> Graph;

// Looped centre 0 and looped leaves 1..q.
auto make_wr(unsigned q) -> Graph;

// Triangle w1 = 0, w2 = 1, w3 = 2; looped pendant 3 + i on w_{i+1}.
auto make_net() -> Graph;

// Base vertices c_i = i; apex d_i for the j-th smallest i in `apex` is q + j.
auto make_triangle_extended(ExtendedKind kind, std::size_t q, std::vector<std::size_t> apex) -> Graph;

// Clique chain with the given clique sizes |K_0|..|K_Q| (each >= 2) and
// bristle counts |B_1|..|B_Q|. Looped vertices are numbered in encoding
// order starting at p_0 = 0; bristles follow, grouped by attachment.
auto make_hbis(const std::vector<std::size_t> & clique_sizes, const std::vector<std::size_t> & bristles) -> Graph;

struct JGraph
{
    unsigned p = 0, q = 0, t = 0;
    Graph graph;
    VertexSet a, b, b_prime, a_prime;
    // matching[i] = (b[i], b_prime[i])
    std::vector<std::pair<Vertex, Vertex>> matching;
};

// A (pt vertices), B (qt), B' (qt), A' (pt), numbered in that order; edges
// A x B, the matching B_i - B'_i, and B' x A'.
auto make_j_graph(unsigned p, unsigned q, unsigned t) -> JGraph;

} // namespace retract
