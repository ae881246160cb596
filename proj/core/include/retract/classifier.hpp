#pragma once

#include "retract/graph.hpp"
#include "retract/structure.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace retract {

enum class ComponentTag
{
    Trivial,                // reflexive clique or irreflexive complete bipartite
    Hbis,                   // member of the H_BIS family
    IrreflexiveCaterpillar, // irreflexive tree whose non-leaves induce a path
    Hard
};

enum class VerdictClass
{
    FP,
    BIS,
    SAT,
    UNKNOWN
};

auto to_string(ComponentTag tag) -> std::string;
auto to_string(VerdictClass c) -> std::string;

struct ComponentReport
{
    VertexSet vertices; // ids in the input graph
    ComponentTag tag = ComponentTag::Trivial;
    StructuralWitness witness; // ids in the input graph; may be empty for Hard
};

struct ClassVerdict
{
    VerdictClass verdict = VerdictClass::FP;
    bool square_free = true;
    std::vector<ComponentReport> components;
};

// X(k1,k2,k3) shapes whose retraction problem is #SAT-hard and that arise
// as the neighbourhood of a looped vertex.
auto is_hard_x_shape(unsigned k1, unsigned k2, unsigned k3) -> bool;

// (k1,k2,k3) if H[Γ(b)] is isomorphic to some X(k1,k2,k3) centred at b.
auto x_shape_of_neighbourhood(const Graph & h, Vertex b) -> std::optional<std::array<unsigned, 3>>;

// Looped b and unlooped g satisfying the degree-2 bristle hypotheses.
auto find_degree2_bristle(const Graph & h) -> StructuralWitness;

auto find_hard_x_neighbourhood(const Graph & h) -> StructuralWitness;

// Shape tag of a connected graph and, for Hard square-free inputs, the
// first witness found along the ladder: mixed triangle, WR3, net, reflexive
// cycle of length >= 5, degree-2 bristle, hard X neighbourhood.
auto classify_component(const Graph & hc, bool square_free) -> ComponentReport;

auto classify(const Graph & h) -> ClassVerdict;

} // namespace retract
