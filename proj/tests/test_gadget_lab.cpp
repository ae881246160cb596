#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/tables.hpp"

#include "retract/families.hpp"
#include "retract/gadgets.hpp"
#include "retract/htypes.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace retract;

namespace {

// Independent type extraction from an image of J.
auto brute_type(const std::vector<Vertex> & image, const JGraph & j) -> HType
{
    HType t;
    for (auto v : j.a)
        t.t1.push_back(image[v]);
    for (auto v : j.a_prime)
        t.t3.push_back(image[v]);
    for (auto [x, y] : j.matching)
        t.t2.push_back({image[x], image[y]});
    auto tidy = [](auto & s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    };
    tidy(t.t1);
    tidy(t.t2);
    tidy(t.t3);
    return t;
}

auto mixed_triangle_with_pendant() -> Graph
{
    return fixtures::loop_all(fixtures::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}), {0, 1, 3});
}

auto degree2_example() -> Graph
{
    auto h = make_x_graph(1, 0, 1);
    auto z = h.add_vertex();
    h.add_edge(1, z);
    return h;
}

auto bicliqued(const Graph & h, const VertexSet & s, const VertexSet & t) -> bool
{
    for (auto x : s)
        for (auto y : t)
            if (! h.adjacent(x, y))
                return false;
    return true;
}

// Maximal types by comparing every pair of non-empty types, encoded as bitmasks.
auto brute_maximal_types(const Graph & h) -> std::set<HType>
{
    auto n = static_cast<Vertex>(h.vertex_count());
    std::vector<OrderedEdge> pairs;
    for (Vertex x = 0; x < n; ++x)
        for (auto y : h.neighbours(x))
            pairs.push_back({x, y});
    auto m = pairs.size();
    struct Bits
    {
        std::uint32_t t1, t2, t3;
    };
    std::vector<Bits> nonempty;
    for (std::uint32_t t1 = 1; t1 < (1u << n); ++t1)
        for (std::uint32_t t3 = 1; t3 < (1u << n); ++t3)
            for (std::uint32_t t2 = 1; t2 < (1u << m); ++t2) {
                bool ok = true;
                for (std::size_t i = 0; ok && i < m; ++i) {
                    if (! (t2 >> i & 1))
                        continue;
                    auto [x, y] = pairs[i];
                    for (Vertex a = 0; ok && a < n; ++a) {
                        if (t1 >> a & 1)
                            ok = h.adjacent(a, x);
                        if (ok && t3 >> a & 1)
                            ok = h.adjacent(a, y);
                    }
                }
                if (ok)
                    nonempty.push_back({t1, t2, t3});
            }
    auto within = [](std::uint32_t s, std::uint32_t t) { return (s & t) == s; };
    std::set<HType> out;
    for (auto & t : nonempty) {
        bool maximal = true;
        for (auto & u : nonempty)
            if (within(t.t1, u.t1) && within(t.t2, u.t2) && within(t.t3, u.t3)
                && (t.t1 != u.t1 || t.t2 != u.t2 || t.t3 != u.t3)) {
                maximal = false;
                break;
            }
        if (! maximal)
            continue;
        HType ht;
        for (Vertex a = 0; a < n; ++a) {
            if (t.t1 >> a & 1)
                ht.t1.push_back(a);
            if (t.t3 >> a & 1)
                ht.t3.push_back(a);
        }
        for (std::size_t i = 0; i < m; ++i)
            if (t.t2 >> i & 1)
                ht.t2.push_back(pairs[i]);
        std::sort(ht.t2.begin(), ht.t2.end());
        out.insert(std::min(ht, symmetric(ht)));
    }
    return out;
}

} // namespace

TEST_SUITE("gadget_lab")
{
    TEST_CASE("families")
    {
        auto x = make_x_graph(1, 0, 1);
        CHECK(x.vertex_count() == 4);
        CHECK(x.looped(0));
        CHECK(! x.looped(1));
        CHECK(oracle::isomorphic(make_wr(3), fixtures::loop_all(make_star(3), {0, 1, 2, 3})));
        CHECK(oracle::isomorphic(make_net(), fixtures::net()));
        CHECK(is_isomorphic(make_triangle_extended(ExtendedKind::Cycle, 5, {1, 3, 4}), fixtures::triangle_extended_c5()));
        CHECK(is_isomorphic(make_hbis({3, 3, 2, 2}, {4, 2, 1}), fixtures::running_example()));
        CHECK(is_isomorphic(make_hbis({2, 3, 2, 3, 4, 2, 2}, {2, 0, 0, 4, 2, 1}), fixtures::intro_chain()));
        CHECK(is_isomorphic(make_hbis({2, 3}, {2}), fixtures::intro_right()));
    }

    TEST_CASE("J graphs")
    {
        auto j = make_j_graph(1, 1, 1);
        CHECK(j.graph.vertex_count() == 4);
        CHECK(j.graph.edge_count() == 3);
        auto j2 = make_j_graph(1, 2, 1);
        CHECK(j2.b.size() == 2);
        CHECK(j2.matching.size() == 2);
        CHECK(make_j_graph(2, 1, 3).a.size() == 6);
    }

    TEST_CASE("types of homomorphisms")
    {
        auto h = make_x_graph(1, 0, 1);
        auto j = make_j_graph(1, 1, 1);
        std::vector<Vertex> constant(j.graph.vertex_count(), 0);
        auto t = htype_of(constant, j, h);
        CHECK(t.t1 == VertexSet{0});
        CHECK(t.t2 == std::vector<OrderedEdge>{{0, 0}});
        CHECK(t.t3 == VertexSet{0});

        std::map<HType, BigCount> brute;
        std::uint64_t total = 0;
        oracle::for_each_map(j.graph, oracle::full(j.graph, h), h, [&](const std::vector<Vertex> & image) {
            auto ty = htype_of(image, j, h);
            CHECK(ty == brute_type(image, j));
            for (auto a : ty.t1)
                CHECK(set_is_subset(ty.b(), neighbourhood(h, a)));
            ++brute[ty];
            ++total;
        });
        CHECK(type_histogram(j, h) == brute);
        CHECK(total == oracle::count(j.graph, h));
    }

    TEST_CASE("non-empty types")
    {
        auto h = make_x_graph(1, 0, 1);
        HType empty_t2{{0}, {}, {0}};
        CHECK(! is_nonempty_type(empty_t2, h));
        auto rows = tables::table1(1);
        auto & r5 = rows[4];
        HType t5{r5.a, edge_pairs(h, r5.b, r5.b_prime), r5.a_prime};
        CHECK(is_nonempty_type(t5, h));
        CHECK(is_maximal_type(t5, h));
        // The unlooped leaf g_1 is not adjacent to r1.
        HType bad{{1}, edge_pairs(h, {2}, {2}), {2}};
        CHECK(! is_nonempty_type(bad, h));
    }

    TEST_CASE("maximal types agree with a pairwise superset search")
    {
        for (auto & h : {make_x_graph(1, 0, 1), make_path(3, Loops::All)}) {
            auto fast = enumerate_maximal_types(h);
            CHECK(std::set<HType>(fast.begin(), fast.end()) == brute_maximal_types(h));
        }
    }

    TEST_CASE("first table for every k1 up to 7")
    {
        for (unsigned k1 = 1; k1 <= 7; ++k1) {
            CAPTURE(k1);
            auto c = tables::compare(make_x_graph(k1, 0, 1), tables::table1(k1));
            CHECK(c.match);
            CHECK(c.nhat_ok);
            CHECK(c.enumerated_classes == 6);
        }
    }

    TEST_CASE("second table for k1 in 3..6")
    {
        for (unsigned k1 = 3; k1 <= 6; ++k1) {
            CAPTURE(k1);
            auto c = tables::compare(make_x_graph(k1, 1, 1), tables::table2(k1));
            CHECK(c.match);
            CHECK(c.nhat_ok);
            CHECK(c.enumerated_classes == 10);
        }
    }

    TEST_CASE("maximal types of a reflexive edge")
    {
        auto types = enumerate_maximal_types(make_complete(2, Loops::All));
        REQUIRE(types.size() == 1);
        CHECK(types[0].b() == VertexSet{0, 1});
        CHECK(types[0].b_prime() == VertexSet{0, 1});
    }

    TEST_CASE("nhat values and counts")
    {
        auto r = tables::table1(2)[4];
        auto h = make_x_graph(2, 0, 1);
        HType t5{r.a, edge_pairs(h, r.b, r.b_prime), r.a_prime};
        CHECK(nhat(t5, 1, 1, 1) == 33);
        auto r1 = tables::table1(1)[0];
        auto h1 = make_x_graph(1, 0, 1);
        HType t1{r1.a, edge_pairs(h1, r1.b, r1.b_prime), r1.a_prime};
        CHECK(nhat(t1, 1, 1, 1) == 16);
        // The exact count of a type never exceeds its surjection-free bound.
        // A block of size 1 cannot cover the four vertices T1 needs.
        CHECK(count_type(t1, make_j_graph(1, 1, 1), h1) == 0);
        auto j = make_j_graph(4, 1, 1);
        CHECK(count_type(t1, j, h1) > 0);
        CHECK(count_type(t1, j, h1) <= nhat(t1, 4, 1, 1));
    }

    TEST_CASE("dominance parameters")
    {
        for (unsigned k1 = 1; k1 <= 7; ++k1) {
            CAPTURE(k1);
            auto r = find_dominance_params(DominanceVariant::T5, k1);
            CHECK(r.ok());
            CHECK(r.gamma < 1);
            CHECK(r.p > 0);
            CHECK(r.q > 0);
        }
        for (unsigned k1 = 3; k1 <= 6; ++k1) {
            CAPTURE(k1);
            CHECK(find_dominance_params(DominanceVariant::T9, k1).ok());
        }
        for (unsigned k1 = 1; k1 <= 2; ++k1) {
            CAPTURE(k1);
            auto r = find_dominance_params(DominanceVariant::T9, k1);
            CHECK(! r.interval_nonempty);
            CHECK(! r.ok());
        }
    }

    TEST_CASE("dominance certificate holds at t = 1")
    {
        auto r = find_dominance_params(DominanceVariant::T5, 3);
        REQUIRE(r.ok());
        auto & dom = r.types[r.dominant];
        auto best = nhat(dom, r.p, r.q, 1);
        for (std::size_t i = 0; i < r.types.size(); ++i) {
            if (i == r.dominant)
                continue;
            CHECK(Rational(nhat(r.types[i], r.p, r.q, 1), best) <= r.gamma);
        }
    }

    TEST_CASE("pinned configurations")
    {
        auto hb = make_x_graph(1, 3, 0);
        auto st = decompose_wr3_target(hb, 0);
        CHECK(st.k() == 3);
        CHECK(pinned_configurations(hb, st, 0) == 8);
        CHECK(pinned_configurations(hb, st, st.singles[0]) == 2);
        CHECK(pinned_configurations(hb, st, st.u[0]) == 1);
        CHECK(pinned_configuration_list(hb, st, 0).size() == 8);
    }

    TEST_CASE("pin to a neighbourhood")
    {
        auto edge = make_path(2, Loops::None);
        auto r = verify_pin_neighbourhood(fixtures::net(), 1, edge);
        CHECK(r.pass);
        auto sub = induced_subgraph(fixtures::net(), neighbourhood(fixtures::net(), 1)).graph;
        CHECK(r.lhs == oracle::count(edge, sub));
        auto empty = verify_pin_neighbourhood(fixtures::net(), 1, Graph{});
        CHECK(empty.lhs == 1);
        CHECK(empty.rhs == 1);
        CHECK(verify_pin_neighbourhood(make_x_graph(2, 1, 1), 0, make_path(3, Loops::None)).pass);
        CHECK(format_report(r).rfind("PASS pin lhs=", 0) == 0);
    }

    TEST_CASE("pin with singleton local lists")
    {
        auto h = fixtures::net();
        auto g = make_path(3, Loops::None);
        auto nb = neighbourhood(h, 1);
        ListAssignment local{{0}, VertexSet(), {2}};
        for (Vertex i = 0; i < nb.size(); ++i)
            local[1].push_back(i);
        auto r = verify_pin_neighbourhood(h, 1, g, local);
        CHECK(r.pass);
        auto sub = induced_subgraph(h, nb).graph;
        CHECK(r.lhs == oracle::count(g, local, sub));
    }

    TEST_CASE("two pins")
    {
        auto h = mixed_triangle_with_pendant();
        CHECK(verify_two_pin(h, 0, 1, make_path(3, Loops::None)).pass);
        Graph k1(1);
        auto single = verify_two_pin(h, 0, 1, k1);
        CHECK(single.lhs == 3);
        CHECK(single.pass);
        auto path = make_path(4, Loops::None);
        auto none = verify_two_pin(path, 0, 1, k1);
        CHECK(none.lhs == 0);
        CHECK(none.rhs == 0);
    }

    TEST_CASE("boost decomposition")
    {
        Graph hp(3);
        hp.add_edge(0, 0);
        hp.add_edge(0, 1);
        hp.add_edge(0, 2);
        hp.add_edge(1, 2);
        Graph k1(1);
        ListAssignment s{{0, 1}};
        auto r = verify_boost_decomposition(hp, 0, 1, k1, s, 2);
        CHECK(r.report.pass);
        CHECK(r.z_star == 8);
        CHECK(r.target == 2);
        CHECK(r.total == r.z_star + r.z0);
        auto zero = verify_boost_decomposition(hp, 0, 1, k1, s, 0);
        CHECK(zero.z_star == zero.target);

        // Z0 counts exactly the homomorphisms that leave {b, r1} on V(G).
        auto inst = build_boost_instance(hp, 0, 1, k1, s, 2);
        BigCount outside = 0;
        oracle::for_each_map(inst.graph, inst.lists, hp, [&](const std::vector<Vertex> & image) {
            if (image[0] != 0 && image[0] != 1)
                ++outside;
        });
        CHECK(outside == r.z0);
    }

    TEST_CASE("degree-2 bristle blow-up")
    {
        auto h = degree2_example();
        auto r = verify_degree2_bristle(h, 0, 1, make_path(2, Loops::None));
        CHECK(r.report.pass);
        auto empty = verify_degree2_bristle(h, 0, 1, Graph{});
        CHECK(empty.report.lhs == 1);
        CHECK(empty.report.rhs == 1);
        CHECK(degree2_exponent(h, 0, 1) == 4);
        auto blow = build_degree2_blowup(h, 0, 1);
        CHECK(blow.graph.vertex_count() == blow.kept + 16);
        CHECK_THROWS_AS(check_degree2_hypotheses(make_x_graph(1, 0, 1), 0, 1), GadgetError);
    }

    TEST_CASE("WR3 per-function counts, k = 0")
    {
        CutInstance inst{make_complete(3, Loops::None), {0, 1, 2}, 3};
        auto r = verify_wr3_zphi(inst, make_x_graph(0, 0, 3), 0, 3, 1);
        CHECK(r.report.pass);
        CHECK(r.observed == r.predicted);
        CHECK(r.observed.size() == separating_functions(inst).size());
    }

    TEST_CASE("WR3 formula")
    {
        // Surj(3,3)^3 * 1^{3} * 3^0 for k = 0, all three edges cut.
        CHECK(wr3_zphi_formula(0, 3, 1, 3, 3, 3) == 216);
        CHECK(wr3_zphi_formula(1, 3, 1, 3, 3, 3) == 0);
    }

    TEST_CASE("cut and monochromatic sizes")
    {
        auto g = make_star(3);
        std::vector<unsigned> phi{0, 0, 1, 2};
        CHECK(cut_size(g, phi) == 2);
        CHECK(mono_sizes(g, phi, 3) == std::vector<std::size_t>{1, 0, 0});
    }

    TEST_CASE("net per-function counts")
    {
        CutInstance edge{fixtures::from_edges(3, {{0, 1}}), {0, 1, 2}, 0};
        auto a = verify_net_zphi(edge, make_net(), {0, 1, 2}, {1, 1, 1});
        CHECK(a.report.pass);
        CHECK(a.observed == a.predicted);

        CutInstance star{make_star(3), {1, 2, 3}, 0};
        auto zero = verify_net_zphi(star, make_net(), {0, 1, 2}, {0, 0, 0});
        CHECK(zero.report.pass);
        CHECK(zero.total == 3);
        auto mixed = verify_net_zphi(star, make_net(), {0, 1, 2}, {2, 1, 1});
        CHECK(mixed.report.pass);
        BigCount sum = 0;
        for (auto & [phi, z] : mixed.observed)
            sum += z;
        CHECK(sum == mixed.total);
    }

    TEST_CASE("cycle gadget")
    {
        auto c5 = make_cycle(5, Loops::All);
        auto d = recognize_triangle_extended(c5);
        REQUIRE(d);
        auto r = verify_cycle_gadget(c5, *d, 2);
        CHECK(r.pass);
        CHECK(r.lhs == 2);
        auto tec = fixtures::triangle_extended_c5();
        auto dt = recognize_triangle_extended(tec);
        REQUIRE(dt);
        CHECK(verify_cycle_gadget(tec, *dt, 2).pass);
        CHECK_THROWS_AS(verify_cycle_gadget(c5, *d, 0), GadgetError);
    }

    TEST_CASE("Kelk condition")
    {
        CHECK(check_kelk_condition(make_x_graph(7, 0, 1)).holds);
        CHECK(check_kelk_condition(make_x_graph(5, 0, 2)).holds);
        auto bad = check_kelk_condition(make_x_graph(1, 0, 1));
        CHECK(bad.hypothesis_ok);
        CHECK(! bad.holds);
        REQUIRE(bad.counterexample);
        auto [s, t] = *bad.counterexample;
        auto h = make_x_graph(1, 0, 1);
        CHECK(bicliqued(h, s, t));
        CHECK(s != bad.f);
        CHECK(t != bad.f);
        CHECK(s.size() * t.size() >= bad.f.size() * h.vertex_count());
        CHECK(! check_kelk_condition(make_complete(3, Loops::All)).hypothesis_ok);
    }

    TEST_CASE("Kelk scans agree")
    {
        std::mt19937 rng(3);
        for (int round = 0; round < 60; ++round) {
            std::size_t n = 2 + rng() % 7;
            Graph h(n);
            h.add_edge(0, 0);
            for (Vertex v = 1; v < n; ++v)
                h.add_edge(0, v);
            for (Vertex u = 1; u < n; ++u)
                for (Vertex v = u; v < n; ++v)
                    if (rng() % 3 == 0)
                        h.add_edge(u, v);
            auto fast = check_kelk_condition(h);
            auto slow = check_kelk_condition_exhaustive(h);
            CHECK(fast.hypothesis_ok == slow.hypothesis_ok);
            CHECK(fast.holds == slow.holds);
        }
    }
}
