#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace retract {

using Vertex = std::uint32_t;

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Finite undirected graph on vertices 0..n-1. Loops are stored as the pair
// (v,v); there are no multi-edges.
class Graph
{
  public:
    Graph() = default;
    explicit Graph(std::size_t n);

    auto vertex_count() const -> std::size_t { return n_; }

    // Idempotent; u == v adds a loop.
    auto add_edge(Vertex u, Vertex v) -> void;
    auto add_vertex() -> Vertex;

    auto adjacent(Vertex u, Vertex v) const -> bool;
    auto looped(Vertex v) const -> bool;

    // Neighbours in increasing order, including v itself when looped.
    auto neighbours(Vertex v) const -> const VertexSet &;

    // Number of incident edges; a loop counts once.
    auto degree(Vertex v) const -> std::size_t;

    // Number of neighbours other than v itself.
    auto proper_degree(Vertex v) const -> std::size_t;

    auto edge_count() const -> std::size_t { return edge_count_; }

    // Edges as (min,max) pairs sorted lexicographically.
    auto edges() const -> std::vector<std::pair<Vertex, Vertex>>;

    auto is_reflexive() const -> bool;
    auto is_irreflexive() const -> bool;

    auto operator==(const Graph & other) const -> bool;

  private:
    auto check(Vertex v) const -> void;

    std::size_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

// Γ_H(v): contains v iff v is looped.
auto neighbourhood(const Graph & h, Vertex v) -> VertexSet;

// Intersection of the neighbourhoods of a non-empty set.
auto common_neighbours(const Graph & h, const VertexSet & u) -> VertexSet;

// Vertices reachable from v by a walk on exactly k edges (loops usable as steps).
auto distance_k_neighbourhood(const Graph & h, Vertex v, unsigned k) -> VertexSet;

struct InducedSubgraph
{
    Graph graph;
    // original[i] is the vertex of the parent graph relabelled to i.
    std::vector<Vertex> original;
};

auto induced_subgraph(const Graph & h, const VertexSet & u) -> InducedSubgraph;

auto connected_components(const Graph & h) -> std::vector<VertexSet>;

auto is_connected(const Graph & h) -> bool;

// A loop- and edge-preserving bijection V(a) -> V(b), if one exists.
auto is_isomorphic(const Graph & a, const Graph & b) -> std::optional<std::vector<Vertex>>;

// True iff f is a bijection V(a) -> V(b) preserving adjacency and loops in both directions.
auto is_isomorphism(const Graph & a, const Graph & b, const std::vector<Vertex> & f) -> bool;

// Disjoint union; vertices of b are shifted by a.vertex_count().
auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

// Applies a permutation: vertex v of h becomes perm[v].
auto relabel(const Graph & h, const std::vector<Vertex> & perm) -> Graph;

auto make_vertex_set(std::vector<Vertex> vs) -> VertexSet;
auto set_intersection(const VertexSet & a, const VertexSet & b) -> VertexSet;
auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet;
auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet;
auto set_contains(const VertexSet & a, Vertex v) -> bool;
auto set_is_subset(const VertexSet & a, const VertexSet & b) -> bool;
auto all_vertices(const Graph & h) -> VertexSet;

} // namespace retract
