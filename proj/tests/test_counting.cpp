#include "support/fixtures.hpp"
#include "support/oracle.hpp"

#include "retract/counting.hpp"
#include "retract/families.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace retract;

namespace {

auto random_instance(std::mt19937 & rng, Graph & g, Graph & h, ListAssignment & lists) -> void
{
    std::size_t gn = 1 + rng() % 6;
    std::size_t hn = 1 + rng() % 5;
    g = Graph(gn);
    for (Vertex u = 0; u < gn; ++u)
        for (Vertex v = u + 1; v < gn; ++v)
            if (rng() % 2)
                g.add_edge(u, v);
    h = Graph(hn);
    for (Vertex u = 0; u < hn; ++u)
        for (Vertex v = u; v < hn; ++v)
            if (rng() % 2)
                h.add_edge(u, v);
    lists.assign(gn, {});
    for (auto & l : lists)
        for (Vertex x = 0; x < hn; ++x)
            if (rng() % 3)
                l.push_back(x);
}

} // namespace

TEST_SUITE("counting")
{
    TEST_CASE("list homomorphism counts on small cases")
    {
        Graph k1(1);
        auto net = fixtures::net();
        CHECK(count_list_homs(k1, full_lists(k1, net), net) == 6);
        // Independent sets of an edge: looped Out, unlooped In.
        auto i = fixtures::loop_all(fixtures::from_edges(2, {{0, 1}}), {0});
        auto edge = make_path(2, Loops::None);
        CHECK(count_homs(edge, i) == 3);
        // Oracle value computed by plain enumeration of 14^4 maps.
        CHECK(count_homs(make_cycle(4, Loops::None), fixtures::running_example()) == 385);
        CHECK(count_homs(make_cycle(4, Loops::None), fixtures::running_example())
            == oracle::count(make_cycle(4, Loops::None), fixtures::running_example()));
    }

    TEST_CASE("empty lists and empty source")
    {
        auto h = make_complete(3, Loops::None);
        auto g = make_path(2, Loops::None);
        ListAssignment lists{{0}, {}};
        CHECK(count_list_homs(g, lists, h) == 0);
        CHECK(count_homs(Graph{}, h) == 1);
    }

    TEST_CASE("retractions")
    {
        auto h = make_path(3, Loops::None);
        auto g = make_path(3, Loops::None);
        ListAssignment singletons{{0}, {1}, {2}};
        CHECK(count_retractions(g, singletons, h) == 1);
        ListAssignment bad{{0, 1}, {1}, {2}};
        CHECK_THROWS_AS(count_retractions(g, bad, h), CountingError);
    }

    TEST_CASE("weighted counts")
    {
        auto h = fixtures::net();
        auto g = make_path(3, Loops::None);
        std::vector<BigCount> ones(h.vertex_count(), 1);
        CHECK(count_weighted_list_homs(g, full_lists(g, h), h, ones) == count_list_homs(g, full_lists(g, h), h));
        Graph k1(1);
        std::vector<BigCount> w{1, 2, 3, 4, 5, 6};
        CHECK(count_weighted_list_homs(k1, full_lists(k1, h), h, w) == 21);
    }

    TEST_CASE("exact counter matches both naive engines on random instances")
    {
        std::mt19937 rng(2024);
        for (int round = 0; round < 150; ++round) {
            Graph g, h;
            ListAssignment lists;
            random_instance(rng, g, h, lists);
            auto exact = count_list_homs(g, lists, h);
            CHECK(exact == naive_count(g, lists, h));
            CHECK(exact == oracle::count(g, lists, h));
            BigCount visited = 0;
            for_each_list_hom(g, lists, h, [&](const std::vector<Vertex> &) {
                ++visited;
                return true;
            });
            CHECK(visited == exact);
        }
    }

    TEST_CASE("naive count refuses work beyond its budget")
    {
        auto g = make_path(10, Loops::None);
        auto h = make_complete(10, Loops::All);
        CHECK_THROWS(naive_count(g, full_lists(g, h), h, 1000));
        CHECK(naive_work(full_lists(g, h)) == 10'000'000'000ull);
    }

    TEST_CASE("lists file")
    {
        std::istringstream in("# lists\nl 0 *\nl 1 2 0\n");
        auto lists = parse_lists(in, 3, 3);
        CHECK(lists[0] == VertexSet{0, 1, 2});
        CHECK(lists[1] == VertexSet{0, 2});
        CHECK(lists[2] == VertexSet{0, 1, 2});
        std::istringstream back(serialize_lists(lists, 3));
        CHECK(parse_lists(back, 3, 3) == lists);
        std::istringstream bad("l 0 9\n");
        CHECK_THROWS(parse_lists(bad, 3, 3));
    }

    TEST_CASE("surjection counts")
    {
        CHECK(stirling2(2, 2) == 2);
        CHECK(stirling2(3, 2) == 6);
        CHECK(stirling2(2, 3) == 0);
        CHECK(stirling2(10, 2) == 1022);
        CHECK(stirling2(20, 3) == BigCount("3483638676"));
    }

    TEST_CASE("surjection bounds")
    {
        CHECK(check_stirling_bounds(10, 2));
        CHECK(check_stirling_bounds(20, 3));
        CHECK(check_stirling_bounds(2, 1));
        CHECK_THROWS_AS(check_stirling_bounds(3, 2), std::invalid_argument);
    }

    TEST_CASE("simultaneous approximation")
    {
        auto a = dirichlet_approx(std::vector<Rational>{Rational(3, 2)}, 2);
        // r = 1 already meets the bound 1/2; 3/2 rounds half-up to 2.
        CHECK(a.r == 1);
        CHECK(a.t == std::vector<BigCount>{2});
        CHECK(a.max_error == Rational(1, 2));
        auto b = dirichlet_approx(std::vector<Rational>{Rational(1), Rational(2)}, 5);
        CHECK(b.r == 1);
        CHECK(b.t == std::vector<BigCount>{1, 2});
        auto c = dirichlet_approx(std::vector<double>{std::sqrt(2.0)}, 10);
        CHECK(c.r <= 10);
        CHECK(dirichlet_bound_holds(c.max_error, 10, 1));
        CHECK(c.max_error <= Rational(1, 10));
    }

    TEST_CASE("multiterminal cuts")
    {
        CutInstance star{make_star(3), {1, 2, 3}, 2};
        auto r = count_multiterminal_cuts(star);
        CHECK(r.k_min == 2);
        CHECK(r.count == 3);
        CHECK(r.promise_ok);
        CutInstance tri{make_complete(3, Loops::None), {0, 1, 2}, 3};
        CHECK(count_multiterminal_cuts(tri).count == 1);
        star.k = 1;
        CHECK(count_multiterminal_cuts(star).count == 0);
    }

    TEST_CASE("large cuts")
    {
        auto e = count_large_cuts(make_path(2, Loops::None));
        CHECK(e.k_max == 1);
        CHECK(e.count == 1);
        auto c4 = count_large_cuts(make_cycle(4, Loops::None));
        CHECK(c4.k_max == 4);
        CHECK(c4.count == 1);
        auto k3 = count_large_cuts(make_complete(3, Loops::None));
        CHECK(k3.k_max == 2);
        CHECK(k3.count == 3);
    }
}
