#include "retract/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace retract {

namespace
{
    auto add_loops(Graph & g, Loops loops) -> void
    {
        if (loops == Loops::All)
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                g.add_edge(v, v);
    }
}

auto make_path(std::size_t n, Loops loops) -> Graph
{
    Graph g(n);
    for (Vertex v = 1; v < n; ++v)
        g.add_edge(v - 1, v);
    add_loops(g, loops);
    return g;
}

auto make_cycle(std::size_t n, Loops loops) -> Graph
{
    if (n < 3)
        throw std::invalid_argument("cycles need at least three vertices");
    auto g = make_path(n, loops);
    g.add_edge(0, static_cast<Vertex>(n - 1));
    return g;
}

auto make_complete(std::size_t n, Loops loops) -> Graph
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    add_loops(g, loops);
    return g;
}

auto make_complete_bipartite(std::size_t a, std::size_t b) -> Graph
{
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v)
            g.add_edge(u, static_cast<Vertex>(a + v));
    return g;
}

auto make_star(std::size_t k) -> Graph
{
    return make_complete_bipartite(1, k);
}

auto make_x_graph(const XGraphSpec & spec) -> Graph
{
    return make_x_graph(spec.k1, spec.k2, spec.k3);
}

auto make_x_graph(unsigned k1, unsigned k2, unsigned k3) -> Graph
{
    Graph g(1 + k1 + k2 + 2 * k3);
    g.add_edge(0, 0);
    Vertex next = 1;
    for (unsigned i = 0; i < k1; ++i)
        g.add_edge(0, next++);
    for (unsigned i = 0; i < k2; ++i) {
        g.add_edge(0, next);
        g.add_edge(next, next);
        ++next;
    }
    for (unsigned i = 0; i < k3; ++i) {
        Vertex x = next++, y = next++;
        for (auto v : {x, y}) {
            g.add_edge(v, v);
            g.add_edge(0, v);
        }
        g.add_edge(x, y);
    }
    return g;
}

auto make_wr(unsigned q) -> Graph
{
    return make_x_graph(0, q, 0);
}

auto make_net() -> Graph
{
    Graph g(6);
    for (Vertex v = 0; v < 6; ++v)
        g.add_edge(v, v);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    for (Vertex i = 0; i < 3; ++i)
        g.add_edge(i, 3 + i);
    return g;
}

auto make_triangle_extended(ExtendedKind kind, std::size_t q, std::vector<std::size_t> apex) -> Graph
{
    if (q == 0 || (kind == ExtendedKind::Cycle && q < 3))
        throw std::invalid_argument("triangle-extended base is too short");
    std::sort(apex.begin(), apex.end());
    if (std::adjacent_find(apex.begin(), apex.end()) != apex.end())
        throw std::invalid_argument("apex indices must be distinct");
    auto limit = kind == ExtendedKind::Cycle ? q : q - 1;
    for (auto i : apex)
        if (i >= limit)
            throw std::invalid_argument("apex index out of range");
    auto g = kind == ExtendedKind::Cycle ? make_cycle(q, Loops::All) : make_path(q, Loops::All);
    for (auto i : apex) {
        auto d = g.add_vertex();
        g.add_edge(d, d);
        g.add_edge(d, static_cast<Vertex>(i));
        g.add_edge(d, static_cast<Vertex>((i + 1) % q));
    }
    return g;
}

auto make_hbis(const std::vector<std::size_t> & clique_sizes, const std::vector<std::size_t> & bristles) -> Graph
{
    if (clique_sizes.size() < 2 || bristles.size() + 1 != clique_sizes.size())
        throw std::invalid_argument("need Q + 1 >= 2 cliques and Q bristle counts");
    for (auto s : clique_sizes)
        if (s < 2)
            throw std::invalid_argument("cliques need at least two vertices");
    for (std::size_t i = 0; i < bristles.size(); ++i)
        if (bristles[i] > (clique_sizes[i] - 1) * (clique_sizes[i + 1] - 1))
            throw std::invalid_argument("bristle count exceeds the clique bound");

    Graph g(1);
    g.add_edge(0, 0);
    std::vector<Vertex> path{0};
    for (auto size : clique_sizes) {
        VertexSet clique{path.back()};
        for (std::size_t j = 1; j < size; ++j)
            clique.push_back(g.add_vertex());
        path.push_back(clique.back());
        for (auto u : clique)
            for (auto v : clique)
                g.add_edge(u, v);
    }
    for (std::size_t i = 0; i < bristles.size(); ++i)
        for (std::size_t j = 0; j < bristles[i]; ++j)
            g.add_edge(path[i + 1], g.add_vertex());
    return g;
}

auto make_j_graph(unsigned p, unsigned q, unsigned t) -> JGraph
{
    if (p < 1 || q < 1 || t < 1)
        throw std::invalid_argument("J graph parameters must be positive");
    JGraph j;
    j.p = p;
    j.q = q;
    j.t = t;
    std::size_t na = std::size_t{p} * t, nb = std::size_t{q} * t;
    j.graph = Graph(2 * (na + nb));
    Vertex next = 0;
    for (std::size_t i = 0; i < na; ++i)
        j.a.push_back(next++);
    for (std::size_t i = 0; i < nb; ++i)
        j.b.push_back(next++);
    for (std::size_t i = 0; i < nb; ++i)
        j.b_prime.push_back(next++);
    for (std::size_t i = 0; i < na; ++i)
        j.a_prime.push_back(next++);
    for (auto u : j.a)
        for (auto v : j.b)
            j.graph.add_edge(u, v);
    for (std::size_t i = 0; i < nb; ++i) {
        j.graph.add_edge(j.b[i], j.b_prime[i]);
        j.matching.emplace_back(j.b[i], j.b_prime[i]);
    }
    for (auto u : j.b_prime)
        for (auto v : j.a_prime)
            j.graph.add_edge(u, v);
    return j;
}

} // namespace retract
