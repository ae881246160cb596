#pragma once

#include "retract/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace retract {

enum class WitnessTag
{
    None,
    MixedTriangle21,   // two looped vertices, one unlooped
    MixedTriangle12,   // one looped vertex, two unlooped
    InducedWR3,        // looped star with three pairwise non-adjacent looped leaves
    InducedNet,        // reflexive triangle with one looped pendant per corner
    ReflexiveCycleGe5, // induced reflexive cycle of length at least five
    Square,            // four distinct vertices a,b,c,d with edges ab, bc, cd, da
    Degree2Bristle,    // vertices (b, g): looped b, unlooped g with the common-neighbour property
    XNeighbourhood     // looped vertex whose neighbourhood induces a hard X(k1,k2,k3)
};

auto to_string(WitnessTag tag) -> std::string;

struct StructuralWitness
{
    WitnessTag tag = WitnessTag::None;
    // Vertices in a tag-specific order:
    //   MixedTriangle*: the triangle, looped vertices first.
    //   InducedWR3: centre then the three leaves.
    //   InducedNet: w1, w2, w3, then the pendants of w1, w2, w3.
    //   ReflexiveCycleGe5: the cycle in traversal order.
    //   Square: a, b, c, d in cycle order.
    //   Degree2Bristle: b, g.
    //   XNeighbourhood: the centre.
    std::vector<Vertex> vertices;
    // X(k1,k2,k3) parameters for XNeighbourhood.
    unsigned k1 = 0, k2 = 0, k3 = 0;

    explicit operator bool() const { return tag != WitnessTag::None; }
};

// True iff no four distinct vertices form a 4-cycle (chords and loops ignored).
auto is_square_free(const Graph & h) -> bool;
auto find_square(const Graph & h) -> StructuralWitness;

// Length of a shortest cycle on at least three distinct vertices; nullopt for forests.
auto girth(const Graph & h) -> std::optional<std::size_t>;

struct ComponentShape
{
    bool reflexive = false;
    bool irreflexive = false;
    bool mixed = false;
    bool reflexive_clique = false;
    bool irreflexive_complete_bipartite = false;
    bool irreflexive_star = false;
    bool irreflexive_caterpillar = false;
    bool trivial = false;
};

// Requires a connected graph.
auto classify_component_shape(const Graph & h) -> ComponentShape;

auto find_mixed_triangle(const Graph & h) -> StructuralWitness;
auto find_induced_wr3(const Graph & h) -> StructuralWitness;
auto find_induced_net(const Graph & h) -> StructuralWitness;
auto find_induced_reflexive_cycle(const Graph & h, std::size_t min_len) -> StructuralWitness;

// Re-validates a witness against its defining structure in h.
auto validate_witness(const Graph & h, const StructuralWitness & w) -> bool;

struct HbisDecomposition
{
    std::size_t q = 0;                  // Q >= 1
    std::vector<Vertex> path;           // p_0 .. p_{Q+1}
    std::vector<VertexSet> cliques;     // K_0 .. K_Q
    std::vector<VertexSet> bristles;    // B_1 .. B_Q stored at index 0 .. Q-1

    auto bristle_set(std::size_t i) const -> const VertexSet & { return bristles.at(i - 1); }
    auto bristle_bound(std::size_t i) const -> std::size_t
    {
        return (cliques.at(i - 1).size() - 1) * (cliques.at(i).size() - 1);
    }
};

// Checks every defining condition of the decomposition against h.
auto validate_hbis(const Graph & h, const HbisDecomposition & d) -> bool;

// A decomposition if h belongs to the bristled clique-chain class, else nullopt.
// When both orientations are valid the lexicographically smaller path wins.
auto recognize_hbis(const Graph & h) -> std::optional<HbisDecomposition>;

enum class ExtendedKind
{
    Cycle,
    Path
};

struct TriangleExtendedDecomposition
{
    ExtendedKind kind = ExtendedKind::Path;
    std::vector<Vertex> c;              // c_0 .. c_{q-1}
    std::vector<std::size_t> apex_indices; // sorted set I
    std::vector<Vertex> apex;           // apex[j] is d_i for i = apex_indices[j]

    auto apex_of(std::size_t i) const -> std::optional<Vertex>;
};

auto validate_triangle_extended(const Graph & h, const TriangleExtendedDecomposition & d) -> bool;

// Requires a connected reflexive graph.
auto recognize_triangle_extended(const Graph & h) -> std::optional<TriangleExtendedDecomposition>;

// Looped vertices adjacent to every vertex.
auto universal_vertices(const Graph & h) -> VertexSet;

auto looped_vertices(const Graph & h) -> VertexSet;

} // namespace retract
