#pragma once

// The two printed tables of maximal types, transcribed in the vertex ids of
// make_x_graph: b = 0, g_j = j, then the looped single c (if any), then r1, r2.

#include "retract/counting.hpp"
#include "retract/htypes.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

namespace retract::tables {

struct Row
{
    VertexSet a, b, b_prime, a_prime;
    // nhat at p = q = t = 1 from the printed formula.
    BigCount nhat;
};

using Key = std::tuple<VertexSet, VertexSet, VertexSet, VertexSet>;

inline auto sorted(VertexSet s) -> VertexSet
{
    std::sort(s.begin(), s.end());
    return s;
}

inline auto range(Vertex lo, Vertex hi) -> VertexSet
{
    VertexSet s;
    for (Vertex v = lo; v <= hi; ++v)
        s.push_back(v);
    return s;
}

inline auto plus(VertexSet a, const VertexSet & b) -> VertexSet
{
    a.insert(a.end(), b.begin(), b.end());
    return sorted(a);
}

// X(k1,0,1)
inline auto table1(unsigned k1) -> std::vector<Row>
{
    VertexSet b{0};
    auto g = range(1, k1);
    VertexSet tri{0, k1 + 1, k1 + 2};
    auto all = plus(tri, g);
    BigCount k = k1;
    return {
        {all, b, b, all, (3 + k) * 1 * (3 + k)},
        {all, b, tri, tri, (3 + k) * 3 * 3},
        {all, b, all, b, (3 + k) * (3 + k) * 1},
        {tri, tri, tri, tri, BigCount(3 * 9 * 3)},
        {tri, tri, all, b, 3 * (9 + k) * 1},
        {b, all, all, b, 1 * (9 + 2 * k) * 1},
    };
}

// X(k1,1,1)
inline auto table2(unsigned k1) -> std::vector<Row>
{
    VertexSet b{0};
    auto g = range(1, k1);
    Vertex c = k1 + 1;
    VertexSet bc{0, c};
    VertexSet tri{0, k1 + 2, k1 + 3};
    auto all = plus(plus(tri, g), {c});
    BigCount k = k1;
    return {
        {all, b, b, all, (4 + k) * 1 * (4 + k)},
        {all, b, bc, bc, (4 + k) * 2 * 2},
        {all, b, tri, tri, (4 + k) * 3 * 3},
        {all, b, all, b, (4 + k) * (4 + k) * 1},
        {bc, bc, bc, bc, BigCount(2 * 4 * 2)},
        {bc, bc, tri, tri, BigCount(2 * 4 * 3)},
        {bc, bc, all, b, 2 * (6 + k) * 1},
        {tri, tri, tri, tri, BigCount(3 * 9 * 3)},
        {tri, tri, all, b, 3 * (10 + k) * 1},
        {b, all, all, b, 1 * (12 + 2 * k) * 1},
    };
}

// A type and its mirror image share one key.
inline auto canonical(const VertexSet & a, const VertexSet & b, const VertexSet & b2, const VertexSet & a2) -> Key
{
    return std::min(Key{a, b, b2, a2}, Key{a2, b2, b, a});
}

struct Comparison
{
    bool match = false;
    std::size_t enumerated_classes = 0;
    std::size_t expected_rows = 0;
    bool nhat_ok = false;
};

// Enumerated maximal types, up to mirror image, must be exactly the rows and
// each nhat(T,1,1,1) must equal the printed formula.
inline auto compare(const Graph & h, const std::vector<Row> & rows) -> Comparison
{
    Comparison c;
    c.expected_rows = rows.size();
    std::set<Key> expected;
    for (auto & r : rows)
        expected.insert(canonical(r.a, r.b, r.b_prime, r.a_prime));
    std::set<Key> seen;
    c.nhat_ok = true;
    for (auto & t : enumerate_maximal_types(h)) {
        auto key = canonical(t.a(), t.b(), t.b_prime(), t.a_prime());
        seen.insert(key);
        for (auto & r : rows)
            if (canonical(r.a, r.b, r.b_prime, r.a_prime) == key && nhat(t, 1, 1, 1) != r.nhat)
                c.nhat_ok = false;
    }
    c.enumerated_classes = seen.size();
    c.match = seen == expected && expected.size() == rows.size();
    return c;
}

} // namespace retract::tables
