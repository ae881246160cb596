#pragma once

#include "retract/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace retract {

// Expression templates off so that `auto x = a * b` holds a value, not a dangling expression.
using BigCount = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

class CountingError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// lists[v] is the sorted set of allowed images of v in H.
using ListAssignment = std::vector<VertexSet>;

auto full_lists(const Graph & g, const Graph & h) -> ListAssignment;

// Lists file: "l <v> *" or "l <v> <h1> <h2> ..."; unlisted vertices get V(H).
auto parse_lists(std::istream & in, std::size_t g_vertices, std::size_t h_vertices,
    const std::string & source = "<lists>") -> ListAssignment;
auto serialize_lists(const ListAssignment & lists, std::size_t h_vertices) -> std::string;

// Number of list homomorphisms from (G, lists) to H. G must be loop-free and
// |V(H)| <= 64. An empty list yields zero.
auto count_list_homs(const Graph & g, const ListAssignment & lists, const Graph & h) -> BigCount;

auto count_homs(const Graph & g, const Graph & h) -> BigCount;

// Every list must have size 1 or |V(H)|.
auto count_retractions(const Graph & g, const ListAssignment & lists, const Graph & h) -> BigCount;

// Sum over list homomorphisms h of the product of weights[h(v)].
auto count_weighted_list_homs(const Graph & g, const ListAssignment & lists, const Graph & h,
    const std::vector<BigCount> & weights) -> BigCount;

inline constexpr std::uint64_t default_naive_budget = 50'000'000;

// Explicit enumeration of every map v -> lists[v]; the product of the list
// sizes must not exceed the budget.
auto naive_count(const Graph & g, const ListAssignment & lists, const Graph & h,
    std::uint64_t budget = default_naive_budget) -> BigCount;

// Product of list sizes, saturating at UINT64_MAX.
auto naive_work(const ListAssignment & lists) -> std::uint64_t;

// Calls visit(image) for every list homomorphism in lexicographic order of
// image vectors; stops early when visit returns false.
auto for_each_list_hom(const Graph & g, const ListAssignment & lists, const Graph & h,
    const std::function<bool(const std::vector<Vertex> &)> & visit) -> void;

// Number of surjections from an a-set onto a b-set.
auto stirling2(unsigned a, unsigned b) -> BigCount;

// Requires b >= 1 and a >= 2b ln(2b); throws std::invalid_argument otherwise.
auto check_stirling_bounds(unsigned a, unsigned b) -> bool;

struct DirichletResult
{
    std::uint64_t r = 0;
    std::vector<BigCount> t;
    // max_i |r lambda_i - t_i|
    Rational max_error;
};

// Smallest r in 1..N with |r lambda_i - t_i| <= N^(-1/d) for all i, where
// t_i rounds r lambda_i half-up. Throws if lambda is empty or non-positive.
auto dirichlet_approx(const std::vector<Rational> & lambda, std::uint64_t n) -> DirichletResult;
auto dirichlet_approx(const std::vector<double> & lambda, std::uint64_t n) -> DirichletResult;

// Exact test of |x| <= N^(-1/d).
auto dirichlet_bound_holds(const Rational & error, std::uint64_t n, std::size_t d) -> bool;

auto exact_rational(double x) -> Rational;

struct CutInstance
{
    Graph g;
    std::vector<Vertex> terminals;
    std::size_t k = 0;
};

struct MultiterminalCutResult
{
    std::size_t k_min = 0;
    BigCount count;
    bool promise_ok = false;
};

// Enumerates all maps phi with phi(terminal_i) = i.
auto count_multiterminal_cuts(const CutInstance & inst) -> MultiterminalCutResult;

struct LargeCutResult
{
    std::size_t k_max = 0;
    BigCount count;
};

// Maximum cut over unordered bipartitions and the number achieving it.
auto count_large_cuts(const Graph & g) -> LargeCutResult;

} // namespace retract
