#include "support/fixtures.hpp"
#include "support/oracle.hpp"

#include "retract/families.hpp"
#include "retract/hbis.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

using namespace retract;

namespace {

using Constraint = std::pair<std::size_t, std::size_t>;

// Variables of the running example are x_{r1} x_{p1} x_{r2} x_{p2} x_{p3} x_{p4}
// at indices 0..5.
enum : std::size_t
{
    r1,
    p1,
    r2,
    p2,
    p3,
    p4
};

auto all_u(std::size_t n) -> std::set<Constraint>
{
    std::set<Constraint> u;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < a; ++b)
            u.insert({a, b});
    return u;
}

auto as_set(const ImpCspInstance & inst) -> std::set<Constraint>
{
    return {inst.constraints.begin(), inst.constraints.end()};
}

auto running_decomposition() -> HbisDecomposition
{
    auto d = recognize_hbis(fixtures::running_example());
    REQUIRE(d);
    return *d;
}

} // namespace

TEST_SUITE("hbis_encoder")
{
    TEST_CASE("vertex order")
    {
        CHECK(vertex_order(running_decomposition()) == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});
        auto path = recognize_hbis(make_path(4, Loops::All));
        REQUIRE(path);
        auto order = vertex_order(*path);
        CHECK((order == std::vector<Vertex>{0, 1, 2, 3} || order == std::vector<Vertex>{3, 2, 1, 0}));
        // Interior clique vertices follow vertex ids.
        auto h = make_hbis({4, 2}, {0});
        auto d = recognize_hbis(h);
        REQUIRE(d);
        auto o = vertex_order(*d);
        CHECK(o.front() == d->path[0]);
        CHECK(o[1] < o[2]);
    }

    TEST_CASE("instances of the running example")
    {
        auto inst = build_instances(running_decomposition());
        std::set<Constraint> cv{
            {p4, p2}, {p4, r2}, {p4, p1}, {p4, r1}, {p3, p1}, {p3, r1}, {p2, r2}, {p1, r1}};
        CHECK(as_set(inst.iv) == cv);
        auto ce = all_u(6);
        CHECK(ce.size() == 15);
        ce.erase({p1, r1});
        ce.erase({p2, r2});
        CHECK(as_set(inst.ie) == ce);
    }

    TEST_CASE("instances without bristles or with small cliques")
    {
        auto no_bristles = recognize_hbis(make_hbis({3, 3}, {0}));
        REQUIRE(no_bristles);
        auto a = build_instances(*no_bristles);
        CHECK(as_set(a.iv) == all_u(a.iv.variables.size()));
        auto pairs = recognize_hbis(make_hbis({2, 2, 2}, {1, 1}));
        REQUIRE(pairs);
        auto b = build_instances(*pairs);
        CHECK(as_set(b.ie) == all_u(b.ie.variables.size()));
    }

    TEST_CASE("satisfying assignments")
    {
        auto inst = build_instances(running_decomposition());
        CHECK(satisfying_assignments(inst.iv).size() == 14);
        ImpCspInstance free{{"a", "b", "c"}, {}};
        CHECK(satisfying_assignments(free).size() == 8);
        ImpCspInstance chain{{"a", "b", "c", "d"}, {{1, 0}, {2, 1}, {3, 2}}};
        CHECK(satisfying_assignments(chain).size() == 5);
    }

    TEST_CASE("assignment kinds")
    {
        auto d = running_decomposition();
        auto inst = build_instances(d);
        auto zero = classify_assignment(d, inst, BoolAssignment(6, 0));
        CHECK(zero.tag == AssignmentTag::Path);
        CHECK(zero.v == 0);
        auto beta = classify_assignment(d, inst, BoolAssignment{1, 0, 1, 0, 0, 0});
        CHECK(beta.tag == AssignmentTag::GoodBristle);
        CHECK(beta.i == 1);
        CHECK(beta.a == 2);
        CHECK(beta.b == 3);
        CHECK(describe(beta) == "beta1[2,3]");
        CHECK(classify_assignment(d, inst, BoolAssignment{0, 1, 0, 1, 0, 1}).tag == AssignmentTag::Other);
    }

    TEST_CASE("Hve graphs")
    {
        auto d = running_decomposition();
        auto inst = build_instances(d);
        auto hve = build_hve(inst.iv, inst.ie);
        CHECK(hve.graph.vertex_count() == 14);
        CHECK(oracle::count(make_path(2, Loops::None), hve.graph)
            == oracle::count(make_path(2, Loops::None), fixtures::running_example()));

        // With both instances equal to U, Hve is a reflexive path.
        ImpCspInstance u{inst.iv.variables, {}};
        for (auto c : all_u(6))
            u.constraints.push_back(c);
        std::sort(u.constraints.begin(), u.constraints.end());
        auto path = build_hve(u, u);
        CHECK(is_isomorphic(path.graph, make_path(7, Loops::All)));

        // An empty edge instance joins every pair.
        auto clique = build_hve(inst.iv, ImpCspInstance{inst.iv.variables, {}});
        CHECK(is_isomorphic(clique.graph, make_complete(14, Loops::All)));
    }

    TEST_CASE("encoding proof for the running example")
    {
        auto proof = verify_hbis_encoding(fixtures::running_example());
        CHECK(proof.explicit_isomorphism);
        CHECK(proof.isomorphic);
        CHECK(proof.hve.graph.vertex_count() == 14);
        std::size_t path = 0, bristle = 0;
        for (auto & k : proof.kinds) {
            path += k.tag == AssignmentTag::Path;
            bristle += k.tag == AssignmentTag::GoodBristle;
        }
        CHECK(path == 7);
        CHECK(bristle == 7);
        CHECK(is_isomorphism(fixtures::running_example(), proof.hve.graph, proof.bijection));
    }

    TEST_CASE("encoding proofs for the other drawn members")
    {
        auto p3 = verify_hbis_encoding(make_path(3, Loops::All));
        CHECK(p3.hve.graph.vertex_count() == 3);
        CHECK(is_isomorphic(p3.hve.graph, make_path(3, Loops::All)));
        auto chain = verify_hbis_encoding(fixtures::intro_chain());
        CHECK(chain.explicit_isomorphism);
        CHECK(chain.isomorphic);
        CHECK(chain.hve.graph.vertex_count() == 21);
        CHECK_THROWS_AS(verify_hbis_encoding(fixtures::intro_left()), HbisError);
    }

    TEST_CASE("CSP files round trip")
    {
        auto inst = build_instances(running_decomposition());
        std::istringstream in(serialize_csp(inst.iv));
        CHECK(parse_csp(in) == inst.iv);
        std::istringstream bad("var a\nimp a b\n");
        CHECK_THROWS(parse_csp(bad));
    }

    TEST_CASE("encoding proofs for random members")
    {
        std::mt19937 rng(99);
        for (int round = 0; round < 20; ++round) {
            std::size_t q = 1 + rng() % 4;
            std::vector<std::size_t> sizes(q + 1), bristles(q);
            for (auto & s : sizes)
                s = 2 + rng() % 3;
            for (std::size_t i = 0; i < q; ++i)
                bristles[i] = rng() % ((sizes[i] - 1) * (sizes[i + 1] - 1) + 1);
            auto proof = verify_hbis_encoding(make_hbis(sizes, bristles));
            CHECK(proof.explicit_isomorphism);
            CHECK(proof.isomorphic);
        }
    }
}
