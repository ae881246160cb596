#include "support/fixtures.hpp"

#include "retract/classifier.hpp"
#include "retract/families.hpp"

#include <doctest.h>

using namespace retract;

namespace {

auto verdict_of(const Graph & h) -> VerdictClass
{
    return classify(h).verdict;
}

auto looped_vertex() -> Graph
{
    Graph g(1);
    g.add_edge(0, 0);
    return g;
}

auto p3_with_bristles(std::size_t k) -> Graph
{
    return fixtures::add_bristles(make_path(3, Loops::All), 1, k);
}

} // namespace

TEST_SUITE("classifier")
{
    TEST_CASE("hard X shapes")
    {
        CHECK(is_hard_x_shape(1, 0, 1));
        CHECK(is_hard_x_shape(1, 1, 0));
        CHECK(is_hard_x_shape(2, 2, 0));
        CHECK(is_hard_x_shape(3, 1, 1));
        CHECK(is_hard_x_shape(5, 0, 2));
        CHECK(is_hard_x_shape(0, 0, 3));
        CHECK(! is_hard_x_shape(0, 0, 1));
        CHECK(! is_hard_x_shape(1, 2, 0));
        CHECK(! is_hard_x_shape(0, 1, 0));
        auto shape = x_shape_of_neighbourhood(make_x_graph(2, 1, 1), 0);
        REQUIRE(shape);
        CHECK(*shape == std::array<unsigned, 3>{2, 1, 1});
    }

    TEST_CASE("component tags")
    {
        CHECK(classify_component(make_complete(3, Loops::All), true).tag == ComponentTag::Trivial);
        CHECK(classify_component(fixtures::intro_right(), true).tag == ComponentTag::Hbis);
        CHECK(classify_component(make_path(5, Loops::None), true).tag == ComponentTag::IrreflexiveCaterpillar);
        auto left = classify_component(fixtures::intro_left(), true);
        CHECK(left.tag == ComponentTag::Hard);
        CHECK(left.witness.tag == WitnessTag::XNeighbourhood);
        CHECK(validate_witness(fixtures::intro_left(), left.witness));
    }

    TEST_CASE("witness ladder")
    {
        auto mixed = fixtures::loop_all(make_complete(3, Loops::None), {0, 1});
        CHECK(classify_component(mixed, true).witness.tag == WitnessTag::MixedTriangle21);
        CHECK(classify_component(make_wr(3), true).witness.tag == WitnessTag::InducedWR3);
        CHECK(classify_component(fixtures::net(), true).witness.tag == WitnessTag::InducedNet);
        CHECK(classify_component(make_cycle(5, Loops::All), true).witness.tag == WitnessTag::ReflexiveCycleGe5);
        auto tec = fixtures::triangle_extended_c5();
        auto w = classify_component(tec, true).witness;
        CHECK(w.tag == WitnessTag::ReflexiveCycleGe5);
        CHECK(validate_witness(tec, w));
        auto x = classify_component(make_x_graph(1, 0, 1), true).witness;
        CHECK(x.tag == WitnessTag::XNeighbourhood);
    }

    TEST_CASE("degree-2 bristle witness")
    {
        // Looped b, unlooped g, unlooped z: b - g - z.
        auto h = fixtures::loop_all(fixtures::from_edges(3, {{0, 1}, {1, 2}}), {0});
        auto w = find_degree2_bristle(h);
        REQUIRE(w);
        CHECK(w.vertices == std::vector<Vertex>{0, 1});
        CHECK(classify(h).verdict == VerdictClass::SAT);
    }

    TEST_CASE("square-free verdicts")
    {
        CHECK(verdict_of(looped_vertex()) == VerdictClass::FP);
        CHECK(verdict_of(make_complete(2, Loops::All)) == VerdictClass::FP);
        CHECK(verdict_of(make_complete(3, Loops::All)) == VerdictClass::FP);
        CHECK(verdict_of(make_star(4)) == VerdictClass::FP);
        CHECK(verdict_of(make_path(4, Loops::None)) == VerdictClass::BIS);
        CHECK(verdict_of(make_path(5, Loops::None)) == VerdictClass::BIS);
        CHECK(verdict_of(fixtures::intro_right()) == VerdictClass::BIS);
        CHECK(verdict_of(fixtures::intro_left()) == VerdictClass::SAT);
        CHECK(verdict_of(fixtures::net()) == VerdictClass::SAT);
        CHECK(verdict_of(make_cycle(5, Loops::All)) == VerdictClass::SAT);
        CHECK(verdict_of(p3_with_bristles(1)) == VerdictClass::BIS);
        CHECK(verdict_of(p3_with_bristles(2)) == VerdictClass::SAT);
        auto both = disjoint_union(make_complete(3, Loops::All), make_path(2, Loops::None));
        CHECK(verdict_of(both) == VerdictClass::FP);
    }

    TEST_CASE("verdicts with squares")
    {
        auto k4 = classify(make_complete(4, Loops::All));
        CHECK(! k4.square_free);
        CHECK(k4.verdict == VerdictClass::FP);
        CHECK(verdict_of(make_complete_bipartite(2, 3)) == VerdictClass::FP);
        auto chain = classify(fixtures::intro_chain());
        CHECK(! chain.square_free);
        CHECK(chain.verdict == VerdictClass::BIS);
        CHECK(verdict_of(make_cycle(4, Loops::All)) == VerdictClass::UNKNOWN);
        // No 4-cycle and not a tree.
        CHECK(verdict_of(make_cycle(6, Loops::None)) == VerdictClass::SAT);
    }

    TEST_CASE("witness vertices refer to the input graph")
    {
        auto h = disjoint_union(make_complete(2, Loops::All), fixtures::net());
        auto v = classify(h);
        REQUIRE(v.components.size() == 2);
        CHECK(v.components[1].tag == ComponentTag::Hard);
        CHECK(validate_witness(h, v.components[1].witness));
        CHECK(v.components[1].vertices.front() == 2);
    }

    TEST_CASE("names")
    {
        CHECK(to_string(ComponentTag::IrreflexiveCaterpillar) == "caterpillar");
        CHECK(to_string(VerdictClass::UNKNOWN) == "UNKNOWN");
    }
}
