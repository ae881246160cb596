#pragma once

#include "retract/graph.hpp"
#include "retract/structure.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace retract {

class HbisError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Conjunction of implications x_a -> x_b over Boolean variables.
struct ImpCspInstance
{
    std::vector<std::string> variables;
    // (a, b) means Imp(x_a, x_b); indices into `variables`, sorted and unique.
    std::vector<std::pair<std::size_t, std::size_t>> constraints;

    auto operator==(const ImpCspInstance &) const -> bool = default;
};

using BoolAssignment = std::vector<std::uint8_t>;

// CSP file: "var <name>" lines, then "imp <x> <y>" lines.
auto serialize_csp(const ImpCspInstance & inst) -> std::string;
auto parse_csp(std::istream & in, const std::string & source = "<csp>") -> ImpCspInstance;

// Looped vertices in encoding order: clique by clique, p_i first and p_{i+1}
// last inside K_i, remaining clique vertices by id.
auto vertex_order(const HbisDecomposition & d) -> std::vector<Vertex>;

struct HbisInstances
{
    std::vector<Vertex> order;      // order[0] = p_0
    // variable k is x_{order[k + 1]}
    ImpCspInstance iv;
    ImpCspInstance ie;
    // Imp constraints as vertex pairs (u, v) with u after v in `order`.
    std::vector<std::pair<Vertex, Vertex>> u_all;
    std::vector<std::pair<Vertex, Vertex>> cv;
    std::vector<std::pair<Vertex, Vertex>> ce;
};

auto build_instances(const HbisDecomposition & d) -> HbisInstances;

// All satisfying assignments, in lexicographic order with 0 before 1.
auto satisfying_assignments(const ImpCspInstance & inst, std::size_t max_variables = 30) -> std::vector<BoolAssignment>;

auto satisfies(const ImpCspInstance & inst, const BoolAssignment & a) -> bool;

enum class AssignmentTag
{
    Path,
    GoodBristle,
    Other
};

struct AssignmentKind
{
    AssignmentTag tag = AssignmentTag::Other;
    Vertex v = 0;          // Path: the vertex
    std::size_t i = 0;     // GoodBristle: clique boundary index in 1..Q
    Vertex a = 0, b = 0;   // GoodBristle: the defining vertices
};

auto path_assignment(const HbisInstances & inst, Vertex v) -> BoolAssignment;
auto bristle_assignment(const HbisInstances & inst, const HbisDecomposition & d, std::size_t i, Vertex a, Vertex b)
    -> BoolAssignment;
auto classify_assignment(const HbisDecomposition & d, const HbisInstances & inst, const BoolAssignment & sigma)
    -> AssignmentKind;

auto describe(const AssignmentKind & k) -> std::string;

struct HveGraph
{
    Graph graph;
    std::vector<BoolAssignment> assignments; // vertex i is assignments[i]
};

// Vertices: satisfying assignments of iv. Edge {s, s'} (s = s' allowed) iff
// every Imp(x, y) of ie has s(x) -> s'(y) and s'(x) -> s(y).
auto build_hve(const ImpCspInstance & iv, const ImpCspInstance & ie) -> HveGraph;

struct HbisEncodingProof
{
    HbisDecomposition decomposition;
    HbisInstances instances;
    HveGraph hve;
    std::vector<AssignmentKind> kinds;   // per Hve vertex
    std::vector<Vertex> bijection;       // H vertex -> Hve vertex
    bool explicit_isomorphism = false;   // the bijection preserves edges and loops
    bool isomorphic = false;             // independent isomorphism search agrees
};

// Throws HbisError when H has no decomposition or the encoding check fails.
auto verify_hbis_encoding(const Graph & h) -> HbisEncodingProof;

} // namespace retract
