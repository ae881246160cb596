#pragma once

#include "retract/counting.hpp"
#include "retract/families.hpp"
#include "retract/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace retract {

using OrderedEdge = std::pair<Vertex, Vertex>;

// (T1, T2, T3): images of A, matched pairs of B x B', images of A'.
struct HType
{
    VertexSet t1;
    std::vector<OrderedEdge> t2; // sorted, unique
    VertexSet t3;

    auto a() const -> const VertexSet & { return t1; }
    auto b() const -> VertexSet;
    auto b_prime() const -> VertexSet;
    auto a_prime() const -> const VertexSet & { return t3; }

    auto operator<=>(const HType &) const = default;
};

// Swaps the roles of the two sides.
auto symmetric(const HType & t) -> HType;

// Ordered pairs (x, y) with x in b, y in b2 and {x, y} an edge of H.
auto edge_pairs(const Graph & h, const VertexSet & b, const VertexSet & b2) -> std::vector<OrderedEdge>;

// Common neighbourhood of a non-empty set.
auto gamma_set(const Graph & h, const VertexSet & s) -> VertexSet;

// Type of a homomorphism J -> H given as image[v]; throws if not a homomorphism.
auto htype_of(const std::vector<Vertex> & image, const JGraph & j, const Graph & h) -> HType;

// T1, T2, T3 non-empty; T1 x B(T) and B'(T) x T3 inside E(H).
auto is_nonempty_type(const HType & t, const Graph & h) -> bool;

// Non-empty and no single vertex or pair can be added while staying non-empty.
auto is_maximal_type(const HType & t, const Graph & h) -> bool;

// Sets S with S = Gamma(Gamma(S)) and Gamma(S) non-empty.
auto gamma_closed_sets(const Graph & h, std::size_t max_vertices = 16) -> std::vector<VertexSet>;

// Maximal types, one representative per symmetric pair, sorted.
auto enumerate_maximal_types(const Graph & h, std::size_t max_vertices = 16) -> std::vector<HType>;

// |T1|^{pt} |T2|^{qt} |T3|^{pt}
auto nhat(const HType & t, unsigned p, unsigned q, unsigned t_exp) -> BigCount;

// Homomorphisms J -> H grouped by type, by full enumeration.
auto type_histogram(const JGraph & j, const Graph & h, std::uint64_t budget = default_naive_budget)
    -> std::map<HType, BigCount>;

auto count_type(const HType & t, const JGraph & j, const Graph & h, std::uint64_t budget = default_naive_budget)
    -> BigCount;

auto format_set(const VertexSet & s) -> std::string;
auto format_type(const HType & t) -> std::string;

enum class DominanceVariant
{
    T5, // X(k1,0,1), dominant type with B = triangle, B' = everything
    T9  // X(k1,1,1), same shape with the extra looped leaf
};

// log(num) / log(den) with den > 1.
struct LogRatio
{
    Rational num;
    Rational den;

    auto to_string() const -> std::string;
};

struct DominanceResult
{
    DominanceVariant variant = DominanceVariant::T5;
    unsigned k1 = 0;
    std::vector<LogRatio> lower;
    LogRatio upper;
    bool interval_nonempty = false;
    bool exact_tie = false;      // max lower bound equals the upper bound exactly
    unsigned p = 0, q = 0;
    Rational gamma;              // max over other rows of nhat(T_i) / nhat(T_dom) at t = 1
    std::vector<HType> types;    // enumerated maximal types of the target
    std::size_t dominant = 0;    // index into types
    std::string note;

    auto ok() const -> bool { return interval_nonempty && p > 0 && gamma < 1; }
};

// Decides whether some q/p lies strictly between every lower bound and the
// upper bound; returns the simplest such fraction and its gamma certificate.
auto find_dominance_params(DominanceVariant variant, unsigned k1) -> DominanceResult;

// Exact comparison log(a)/log(b) < q/p for b > 1.
auto log_ratio_below(const LogRatio & r, unsigned q, unsigned p) -> bool;
auto log_ratio_above(const LogRatio & r, unsigned q, unsigned p) -> bool;

} // namespace retract
