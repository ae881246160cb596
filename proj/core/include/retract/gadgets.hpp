#pragma once

#include "retract/counting.hpp"
#include "retract/graph.hpp"
#include "retract/structure.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace retract {

class GadgetError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct GadgetReport
{
    std::string name;
    std::string params;
    BigCount lhs;
    BigCount rhs;
    bool pass = false;
    // Which engine produced the oracle counts, plus any diagnostics.
    std::string note;
};

// "PASS|FAIL <name> lhs=<int> rhs=<int>"
auto format_report(const GadgetReport & r) -> std::string;

// A list-homomorphism instance produced by a gadget construction.
struct GadgetInstance
{
    Graph graph;
    ListAssignment lists;
};

// Count of list homomorphisms by explicit enumeration (naive_count when the
// list product fits the budget, backtracking enumeration otherwise), checked
// against count_list_homs.
struct CheckedCount
{
    BigCount value;
    bool consistent = false;
    std::string engine;
};

auto checked_count(const Graph & g, const ListAssignment & lists, const Graph & h,
    std::uint64_t budget = default_naive_budget) -> CheckedCount;

// Counts homomorphisms by visiting each one.
auto enumerate_count(const Graph & g, const ListAssignment & lists, const Graph & h) -> BigCount;

// ---- Pinning to a neighbourhood ------------------------------------------

// G plus an apex w (the last vertex) joined to all of V(G) with list {u}.
// s_local are lists over H[Γ(u)] (local ids, each a singleton or full); an
// empty s_local means full lists.
auto build_pin_instance(const Graph & h, Vertex u, const Graph & g, const ListAssignment & s_local)
    -> GadgetInstance;

// hom((G,S), H[Γ(u)]) = hom((G',S'), H).
auto verify_pin_neighbourhood(const Graph & h, Vertex u, const Graph & g, const ListAssignment & s_local = {})
    -> GadgetReport;

// Two apexes pinned to b1 and b2, target H[Γ(b1) ∩ Γ(b2)].
auto build_two_pin_instance(const Graph & h, Vertex b1, Vertex b2, const Graph & g, const ListAssignment & s_local)
    -> GadgetInstance;
auto verify_two_pin(const Graph & h, Vertex b1, Vertex b2, const Graph & g, const ListAssignment & s_local = {})
    -> GadgetReport;

// ---- Boosting a looped vertex with an unlooped triangle neighbour --------

// H' has b looped and universal, r1 unlooped. Lists S are over V(H') and
// each is a non-empty subset of {b, r1}. G' = G + pin p -> r1 (last vertex
// before the independent sets) + I_v of size s joined to p and v.
auto build_boost_instance(const Graph & hp, Vertex b, Vertex r1, const Graph & g, const ListAssignment & s,
    unsigned s_size) -> GadgetInstance;

struct BoostReport
{
    GadgetReport report;
    BigCount z_star;  // full homomorphisms: h(V(G)) ⊆ {b, r1}
    BigCount z0;      // the rest
    BigCount target;  // hom((G,S), H'[{b, r1}])
    BigCount total;   // hom((G',S'), H')
};

// Checks Z* = 2^{sn} hom((G,S), H'[{b,r1}]) and total = Z* + Z0.
auto verify_boost_decomposition(const Graph & hp, Vertex b, Vertex r1, const Graph & g, const ListAssignment & s,
    unsigned s_size) -> BoostReport;

// ---- Degree-2 bristle blow-up --------------------------------------------

// Throws GadgetError with the violated hypothesis.
auto check_degree2_hypotheses(const Graph & h, Vertex b, Vertex g) -> void;

// 2 ceil(log_{|Γ(g)|} |Γ(b)|)
auto degree2_exponent(const Graph & h, Vertex b, Vertex g) -> unsigned;

struct BlowUp
{
    Graph graph;
    // local[i] is the H vertex for i < kept; copies of g follow.
    std::vector<Vertex> original;
    std::size_t kept = 0;
};

// H[Γ(b)] with g replaced by an independent set of size |Γ(g)|^s adjacent only to b.
auto build_degree2_blowup(const Graph & h, Vertex b, Vertex g) -> BlowUp;

// G' = G + β -> b, γ -> g, I_v (size s) joined to v and γ. Lists S are over
// V(H): each is V(H) or a singleton inside Γ(b) \ {g}; empty means all full.
auto build_degree2_instance(const Graph & h, Vertex b, Vertex g, const Graph & gr, const ListAssignment & s)
    -> GadgetInstance;

struct Degree2Report
{
    GadgetReport report;
    BigCount weighted; // weighted count over H[Γ(b)] with w(g) = |Γ(g)|^s
};

// hom((G',S'), H) = hom((G,S), H').
auto verify_degree2_bristle(const Graph & h, Vertex b, Vertex g, const Graph & gr, const ListAssignment & s = {})
    -> Degree2Report;

// ---- WR3 reduction ---------------------------------------------------------

// Neighbourhood graph H_b of a centre b: b universal and looped; U unlooped
// leaves of b; x_1..x_k looped with no looped neighbour besides b; pairs
// (x_i, y_i) for i > k forming triangles with b.
struct Wr3Structure
{
    Vertex b = 0;
    VertexSet u;
    VertexSet singles;
    std::vector<std::pair<Vertex, Vertex>> pairs;

    auto k() const -> unsigned { return static_cast<unsigned>(singles.size()); }
    auto q() const -> unsigned { return static_cast<unsigned>(singles.size() + pairs.size()); }
    // x_1..x_q, singles first.
    auto x() const -> std::vector<Vertex>;
};

auto decompose_wr3_target(const Graph & hb, Vertex b) -> Wr3Structure;

// Tuples (z_1..z_k) with z ~ z_i ~ x_i, in lexicographic order.
auto pinned_configuration_list(const Graph & hb, const Wr3Structure & st, Vertex z)
    -> std::vector<std::vector<Vertex>>;

// f(z)
auto pinned_configurations(const Graph & hb, const Wr3Structure & st, Vertex z) -> BigCount;

struct Wr3Gadget
{
    GadgetInstance instance;
    std::vector<Vertex> pins;                        // p_1..p_q
    std::vector<VertexSet> vertex_clique;            // C_v per vertex of G
    std::vector<VertexSet> edge_clique;              // C_e per edge of G (edges() order)
    std::map<Vertex, std::vector<Vertex>> pendants;  // w -> (w_1..w_k)
};

auto build_wr3_instance(const CutInstance & inst, const Graph & hb, const Wr3Structure & st, unsigned s, unsigned t)
    -> Wr3Gadget;

// Per separating function: number of full homomorphisms agreeing with it.
using PhiCounts = std::map<std::vector<unsigned>, BigCount>;

struct Wr3Report
{
    GadgetReport report;
    PhiCounts observed;
    PhiCounts predicted;
};

// Surj(s, 2^k+2)^n (2^k)^{t|Cut|} (2^k+2)^{t(m-|Cut|)}
auto wr3_zphi_formula(unsigned k, unsigned s, unsigned t, std::size_t n, std::size_t m, std::size_t cut) -> BigCount;

auto verify_wr3_zphi(const CutInstance & inst, const Graph & hb, Vertex b, unsigned s, unsigned t) -> Wr3Report;

// All phi with phi(terminal_i) = i (0-based colours).
auto separating_functions(const CutInstance & inst) -> std::vector<std::vector<unsigned>>;

// |Cut(phi)| and |Mon_i(phi)|.
auto cut_size(const Graph & g, const std::vector<unsigned> & phi) -> std::size_t;
auto mono_sizes(const Graph & g, const std::vector<unsigned> & phi, unsigned colours) -> std::vector<std::size_t>;

// ---- Net reduction ---------------------------------------------------------

// G's three terminals double as the global pins τ_i -> w_i. Vertices of G
// keep their ids; I_e^i follow edge by edge.
auto build_net_instance(const CutInstance & inst, const Graph & h, const std::array<Vertex, 3> & w,
    const std::array<unsigned, 3> & t) -> GadgetInstance;

struct NetReport
{
    GadgetReport report;
    PhiCounts observed;
    PhiCounts predicted;
    BigCount total;
};

// 3^{t|Cut|} prod_i (|Γ(w_i)|^{t_i} 3^{t-t_i})^{|Mon_i|}, cross-checked
// against 3^{tm} prod_i (|Γ(w_i)|/3)^{t_i |Mon_i|} in exact rationals.
auto net_zphi_formula(const Graph & h, const std::array<Vertex, 3> & w, const std::array<unsigned, 3> & t,
    std::size_t cut, const std::vector<std::size_t> & mono) -> BigCount;

auto verify_net_zphi(const CutInstance & inst, const Graph & h, const std::array<Vertex, 3> & w,
    const std::array<unsigned, 3> & t) -> NetReport;

// ---- Cycle gadget ----------------------------------------------------------

struct CycleGadget
{
    GadgetInstance instance;
    std::pair<Vertex, Vertex> attach; // A(u) = {v_0, v_0'}
    std::size_t ell = 0;
};

// Standalone J_u simulating the list {c_0, c_ell}.
auto build_cycle_gadget(const Graph & h, const TriangleExtendedDecomposition & d, std::size_t ell) -> CycleGadget;

// Replaces every vertex of G whose list is exactly {c_0, c_ell} by a copy of J_u.
auto substitute_cycle_gadget(const Graph & h, const TriangleExtendedDecomposition & d, std::size_t ell,
    const Graph & g, const ListAssignment & lists) -> GadgetInstance;

// (a) every homomorphism maps A(u) to {c_0} or {c_ell}; (b) each occurs once;
// (c) substitution identity on a small G.
auto verify_cycle_gadget(const Graph & h, const TriangleExtendedDecomposition & d, std::size_t ell) -> GadgetReport;

// ---- Kelk condition --------------------------------------------------------

struct KelkResult
{
    bool hypothesis_ok = false; // ∅ ⊊ F(H) ⊊ V(H)
    bool holds = false;
    VertexSet f;
    std::optional<std::pair<VertexSet, VertexSet>> counterexample;
};

// F(H): vertices adjacent to every vertex (including themselves).
auto universal_set(const Graph & h) -> VertexSet;

// Scans every S and the largest admissible T for it; |V(H)| <= 22.
auto check_kelk_condition(const Graph & h) -> KelkResult;

// Scans every pair (S, T); |V(H)| <= 12.
auto check_kelk_condition_exhaustive(const Graph & h) -> KelkResult;

} // namespace retract
