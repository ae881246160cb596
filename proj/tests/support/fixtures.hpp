#pragma once

// Graphs drawn in the running examples, built edge by edge from the drawings
// rather than through the family generators.

#include "retract/graph.hpp"

#include <initializer_list>
#include <utility>

namespace retract::fixtures {

inline auto from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) -> Graph
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

inline auto loop_all(Graph g, std::initializer_list<Vertex> vs) -> Graph
{
    for (auto v : vs)
        g.add_edge(v, v);
    return g;
}

inline auto add_bristles(Graph g, Vertex at, std::size_t count) -> Graph
{
    for (std::size_t i = 0; i < count; ++i)
        g.add_edge(at, g.add_vertex());
    return g;
}

// Reflexive path o - t0 - t1 with two bristles on t0.
inline auto intro_left() -> Graph
{
    auto g = loop_all(from_edges(3, {{0, 1}, {1, 2}}), {0, 1, 2});
    return add_bristles(g, 1, 2);
}

// o - t0 followed by the reflexive triangle t0 t1 t2, two bristles on t0.
inline auto intro_right() -> Graph
{
    auto g = loop_all(from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}}), {0, 1, 2, 3});
    return add_bristles(g, 1, 2);
}

// Twelve looped vertices o t0 t1 t2 p0 p1 p2 p3a p3b p4 p5 p6 (ids 0..11)
// with bristles 2 on t0, 4 on p2, 2 on p4, 1 on p5.
inline auto intro_chain() -> Graph
{
    auto g = from_edges(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10},
                                {10, 11}, {1, 3}, {4, 6}, {6, 9}, {7, 6}, {7, 9}, {8, 6}, {8, 9}});
    g = loop_all(g, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    g = add_bristles(g, 1, 2);
    g = add_bristles(g, 6, 4);
    g = add_bristles(g, 9, 2);
    return add_bristles(g, 10, 1);
}

// Running example: p0 r1 p1 r2 p2 p3 p4 = 0..6, cliques {p0,r1,p1},
// {p1,r2,p2}, {p2,p3}, {p3,p4}; bristles 4 on p1 (7..10), 2 on p2 (11,12),
// 1 on p3 (13).
inline auto running_example() -> Graph
{
    auto g = from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 2}, {2, 4}});
    g = loop_all(g, {0, 1, 2, 3, 4, 5, 6});
    g = add_bristles(g, 2, 4);
    g = add_bristles(g, 4, 2);
    return add_bristles(g, 5, 1);
}

// Reflexive C5 c0..c4 with apexes on the edges c1c2, c3c4, c4c0 (ids 5, 6, 7).
inline auto triangle_extended_c5() -> Graph
{
    auto g = from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 2}, {6, 3}, {6, 4}, {7, 4}, {7, 0}});
    return loop_all(g, {0, 1, 2, 3, 4, 5, 6, 7});
}

// Reflexive triangle w1 w2 w3 (0..2) with a looped pendant on each corner.
inline auto net() -> Graph
{
    auto g = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    return loop_all(g, {0, 1, 2, 3, 4, 5});
}

} // namespace retract::fixtures
