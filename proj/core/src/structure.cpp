#include "retract/structure.hpp"

#include "retract/families.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <queue>

namespace retract {

auto to_string(WitnessTag tag) -> std::string
{
    switch (tag) {
    case WitnessTag::None: return "None";
    case WitnessTag::MixedTriangle21: return "MixedTriangle21";
    case WitnessTag::MixedTriangle12: return "MixedTriangle12";
    case WitnessTag::InducedWR3: return "InducedWR3";
    case WitnessTag::InducedNet: return "InducedNet";
    case WitnessTag::ReflexiveCycleGe5: return "ReflexiveCycleGe5";
    case WitnessTag::Square: return "Square";
    case WitnessTag::Degree2Bristle: return "Degree2Bristle";
    case WitnessTag::XNeighbourhood: return "XNeighbourhood";
    }
    return "None";
}

namespace
{
    // Neighbours other than v itself.
    auto proper_neighbours(const Graph & h, Vertex v) -> VertexSet
    {
        VertexSet out;
        for (auto w : h.neighbours(v))
            if (w != v)
                out.push_back(w);
        return out;
    }

    auto proper_adjacent(const Graph & h, Vertex u, Vertex v) -> bool
    {
        return u != v && h.adjacent(u, v);
    }

    auto induces_path(const Graph & h, const VertexSet & vs) -> bool
    {
        if (vs.empty())
            return false;
        std::size_t edges = 0;
        for (auto v : vs) {
            std::size_t d = 0;
            for (auto w : vs)
                if (proper_adjacent(h, v, w))
                    ++d;
            if (d > 2)
                return false;
            edges += d;
        }
        return edges / 2 + 1 == vs.size() && is_connected(induced_subgraph(h, vs).graph);
    }

    // Order the vertices of an induced cycle: start at the minimum, step to its smaller neighbour.
    auto order_cycle(const Graph & h, const VertexSet & vs) -> std::vector<Vertex>
    {
        std::vector<Vertex> order{vs.front()};
        Vertex prev = vs.front();
        Vertex cur = std::numeric_limits<Vertex>::max();
        for (auto w : vs)
            if (proper_adjacent(h, vs.front(), w)) {
                cur = w;
                break;
            }
        while (cur != vs.front()) {
            order.push_back(cur);
            Vertex next = cur;
            for (auto w : vs)
                if (w != prev && proper_adjacent(h, cur, w)) {
                    next = w;
                    break;
                }
            prev = cur;
            cur = next;
        }
        return order;
    }

    // Order the vertices of an induced path from its smaller endpoint.
    auto order_path(const Graph & h, const VertexSet & vs) -> std::vector<Vertex>
    {
        if (vs.size() == 1)
            return {vs.front()};
        Vertex start = std::numeric_limits<Vertex>::max();
        for (auto v : vs) {
            std::size_t d = 0;
            for (auto w : vs)
                if (proper_adjacent(h, v, w))
                    ++d;
            if (d == 1) {
                start = v;
                break;
            }
        }
        std::vector<Vertex> order{start};
        Vertex prev = start, cur = start;
        while (order.size() < vs.size()) {
            for (auto w : vs)
                if (w != prev && w != cur && proper_adjacent(h, cur, w)) {
                    prev = cur;
                    cur = w;
                    break;
                }
            order.push_back(cur);
        }
        return order;
    }

    // Maximal cliques (loops ignored) of the subgraph induced by `vs`.
    auto maximal_cliques(const Graph & h, const VertexSet & vs) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> out;
        std::function<void(VertexSet, VertexSet, VertexSet)> expand = [&](VertexSet r, VertexSet p, VertexSet x) {
            if (p.empty() && x.empty()) {
                out.push_back(make_vertex_set(r));
                return;
            }
            Vertex pivot = p.empty() ? x.front() : p.front();
            std::size_t best = 0;
            for (auto c : set_union(p, x)) {
                auto cn = set_intersection(p, proper_neighbours(h, c));
                if (cn.size() >= best) {
                    best = cn.size();
                    pivot = c;
                }
            }
            auto pivot_nbrs = proper_neighbours(h, pivot);
            for (auto v : set_difference(p, pivot_nbrs)) {
                auto nv = proper_neighbours(h, v);
                auto r2 = r;
                r2.push_back(v);
                expand(r2, set_intersection(p, nv), set_intersection(x, nv));
                p = set_difference(p, {v});
                x = set_union(x, {v});
            }
        };
        expand({}, vs, {});
        std::sort(out.begin(), out.end());
        return out;
    }
}

auto find_square(const Graph & h) -> StructuralWitness
{
    auto n = static_cast<Vertex>(h.vertex_count());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex c = a + 1; c < n; ++c) {
            std::vector<Vertex> common;
            for (auto w : h.neighbours(a))
                if (w != a && w != c && h.adjacent(w, c))
                    common.push_back(w);
            if (common.size() >= 2)
                return {WitnessTag::Square, {a, common[0], c, common[1]}};
        }
    return {};
}

auto is_square_free(const Graph & h) -> bool
{
    return ! find_square(h);
}

auto girth(const Graph & h) -> std::optional<std::size_t>
{
    auto n = h.vertex_count();
    std::optional<std::size_t> best;
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    for (Vertex root = 0; root < n; ++root) {
        std::vector<std::size_t> dist(n, unseen);
        std::vector<Vertex> parent(n, root);
        std::queue<Vertex> q;
        dist[root] = 0;
        q.push(root);
        while (! q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto w : h.neighbours(u)) {
                if (w == u)
                    continue;
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                }
                else if (parent[u] != w) {
                    auto len = dist[u] + dist[w] + 1;
                    if (! best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best;
}

auto classify_component_shape(const Graph & h) -> ComponentShape
{
    if (h.vertex_count() == 0 || ! is_connected(h))
        throw GraphError("component shape requires a connected non-empty graph");

    ComponentShape s;
    auto n = static_cast<Vertex>(h.vertex_count());
    s.reflexive = h.is_reflexive();
    s.irreflexive = h.is_irreflexive();
    s.mixed = ! s.reflexive && ! s.irreflexive;

    if (s.reflexive) {
        s.reflexive_clique = true;
        for (Vertex v = 0; v < n; ++v)
            if (h.neighbours(v).size() != n)
                s.reflexive_clique = false;
    }

    if (s.irreflexive) {
        // Two-colour by BFS; complete bipartite iff every cross pair is an edge.
        std::vector<int> side(n, -1);
        bool bipartite = true;
        std::queue<Vertex> q;
        side[0] = 0;
        q.push(0);
        while (! q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto w : h.neighbours(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    q.push(w);
                }
                else if (side[w] == side[u])
                    bipartite = false;
            }
        }
        if (bipartite) {
            std::size_t a = std::count(side.begin(), side.end(), 0);
            std::size_t b = n - a;
            s.irreflexive_complete_bipartite = h.edge_count() == a * b;
        }

        std::size_t big = 0;
        VertexSet spine;
        for (Vertex v = 0; v < n; ++v)
            if (h.degree(v) > 1) {
                ++big;
                spine.push_back(v);
            }
        s.irreflexive_star = big <= 1;

        bool tree = h.edge_count() + 1 == n;
        s.irreflexive_caterpillar = tree && (spine.empty() || induces_path(h, spine));
    }

    s.trivial = s.reflexive_clique || s.irreflexive_complete_bipartite;
    return s;
}

auto find_mixed_triangle(const Graph & h) -> StructuralWitness
{
    auto n = static_cast<Vertex>(h.vertex_count());
    for (Vertex a = 0; a < n; ++a)
        for (auto b : h.neighbours(a)) {
            if (b <= a)
                continue;
            for (auto c : h.neighbours(b)) {
                if (c <= b || ! h.adjacent(a, c))
                    continue;
                std::vector<Vertex> tri{a, b, c};
                auto loops = std::count_if(tri.begin(), tri.end(), [&](Vertex v) { return h.looped(v); });
                if (loops != 1 && loops != 2)
                    continue;
                std::stable_partition(tri.begin(), tri.end(), [&](Vertex v) { return h.looped(v); });
                return {loops == 2 ? WitnessTag::MixedTriangle21 : WitnessTag::MixedTriangle12, tri};
            }
        }
    return {};
}

auto find_induced_wr3(const Graph & h) -> StructuralWitness
{
    auto n = static_cast<Vertex>(h.vertex_count());
    for (Vertex b = 0; b < n; ++b) {
        if (! h.looped(b))
            continue;
        std::vector<Vertex> leaves;
        for (auto w : h.neighbours(b))
            if (w != b && h.looped(w))
                leaves.push_back(w);
        for (std::size_t i = 0; i < leaves.size(); ++i)
            for (std::size_t j = i + 1; j < leaves.size(); ++j) {
                if (h.adjacent(leaves[i], leaves[j]))
                    continue;
                for (std::size_t k = j + 1; k < leaves.size(); ++k)
                    if (! h.adjacent(leaves[i], leaves[k]) && ! h.adjacent(leaves[j], leaves[k]))
                        return {WitnessTag::InducedWR3, {b, leaves[i], leaves[j], leaves[k]}};
            }
    }
    return {};
}

auto find_induced_net(const Graph & h) -> StructuralWitness
{
    auto n = static_cast<Vertex>(h.vertex_count());
    auto looped_nbrs = [&](Vertex v) {
        std::vector<Vertex> out;
        for (auto w : h.neighbours(v))
            if (w != v && h.looped(w))
                out.push_back(w);
        return out;
    };
    for (Vertex w1 = 0; w1 < n; ++w1) {
        if (! h.looped(w1))
            continue;
        for (auto w2 : looped_nbrs(w1)) {
            if (w2 <= w1)
                continue;
            for (auto w3 : looped_nbrs(w2)) {
                if (w3 <= w2 || ! h.adjacent(w1, w3))
                    continue;
                std::array<Vertex, 3> w{w1, w2, w3};
                // Looped pendants private to one triangle corner.
                std::array<std::vector<Vertex>, 3> cand;
                for (int i = 0; i < 3; ++i)
                    for (auto a : looped_nbrs(w[i])) {
                        bool ok = true;
                        for (int j = 0; j < 3; ++j)
                            if (a == w[j] || (j != i && h.adjacent(a, w[j])))
                                ok = false;
                        if (ok)
                            cand[i].push_back(a);
                    }
                for (auto a1 : cand[0])
                    for (auto a2 : cand[1]) {
                        if (a2 == a1 || h.adjacent(a1, a2))
                            continue;
                        for (auto a3 : cand[2])
                            if (a3 != a1 && a3 != a2 && ! h.adjacent(a1, a3) && ! h.adjacent(a2, a3))
                                return {WitnessTag::InducedNet, {w1, w2, w3, a1, a2, a3}};
                    }
            }
        }
    }
    return {};
}

auto find_induced_reflexive_cycle(const Graph & h, std::size_t min_len) -> StructuralWitness
{
    if (min_len < 3)
        throw GraphError("find_induced_reflexive_cycle requires min_len >= 3");
    auto n = static_cast<Vertex>(h.vertex_count());
    std::vector<Vertex> path;
    std::vector<bool> on_path(n, false);
    std::optional<std::vector<Vertex>> found;

    // Extends an induced path whose first vertex is the smallest on the cycle.
    std::function<void()> extend = [&]() {
        auto last = path.back();
        for (auto x : h.neighbours(last)) {
            if (found)
                return;
            if (x == last || x <= path.front() || on_path[x] || ! h.looped(x))
                continue;
            bool closes = path.size() >= 2 && h.adjacent(x, path.front());
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (h.adjacent(x, path[i])) {
                    chord = true;
                    break;
                }
            if (chord)
                continue;
            if (closes) {
                if (path.size() + 1 >= min_len) {
                    found = path;
                    found->push_back(x);
                }
                continue;
            }
            if (path.size() >= 2 && h.adjacent(x, path.front()))
                continue;
            path.push_back(x);
            on_path[x] = true;
            extend();
            on_path[x] = false;
            path.pop_back();
        }
    };

    for (Vertex s = 0; s < n && ! found; ++s) {
        if (! h.looped(s))
            continue;
        path = {s};
        on_path[s] = true;
        extend();
        on_path[s] = false;
    }
    if (! found)
        return {};
    return {WitnessTag::ReflexiveCycleGe5, *found};
}

auto validate_witness(const Graph & h, const StructuralWitness & w) -> bool
{
    const auto & v = w.vertices;
    auto n = h.vertex_count();
    for (auto x : v)
        if (x >= n)
            return false;
    auto distinct = [&]() {
        auto s = make_vertex_set(v);
        return s.size() == v.size();
    };
    auto all_looped = [&]() {
        return std::all_of(v.begin(), v.end(), [&](Vertex x) { return h.looped(x); });
    };
    switch (w.tag) {
    case WitnessTag::None: return v.empty();
    case WitnessTag::MixedTriangle21:
    case WitnessTag::MixedTriangle12: {
        if (v.size() != 3 || ! distinct())
            return false;
        if (! h.adjacent(v[0], v[1]) || ! h.adjacent(v[1], v[2]) || ! h.adjacent(v[0], v[2]))
            return false;
        auto loops = std::count_if(v.begin(), v.end(), [&](Vertex x) { return h.looped(x); });
        return loops == (w.tag == WitnessTag::MixedTriangle21 ? 2 : 1);
    }
    case WitnessTag::InducedWR3:
        if (v.size() != 4 || ! distinct() || ! all_looped())
            return false;
        for (int i = 1; i < 4; ++i)
            if (! h.adjacent(v[0], v[i]))
                return false;
        return ! h.adjacent(v[1], v[2]) && ! h.adjacent(v[1], v[3]) && ! h.adjacent(v[2], v[3]);
    case WitnessTag::InducedNet: {
        if (v.size() != 6 || ! distinct() || ! all_looped())
            return false;
        // Expected proper edges among the six vertices.
        auto expected = [&](int i, int j) {
            if (i < 3 && j < 3)
                return true;
            if (i >= 3 && j >= 3)
                return false;
            int corner = std::min(i, j), pendant = std::max(i, j);
            return pendant - 3 == corner;
        };
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (h.adjacent(v[i], v[j]) != expected(i, j))
                    return false;
        return true;
    }
    case WitnessTag::ReflexiveCycleGe5: {
        if (v.size() < 3 || ! distinct() || ! all_looped())
            return false;
        auto k = v.size();
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if (h.adjacent(v[i], v[j]) != consecutive)
                    return false;
            }
        return true;
    }
    case WitnessTag::Square:
        if (v.size() != 4 || ! distinct())
            return false;
        return h.adjacent(v[0], v[1]) && h.adjacent(v[1], v[2]) && h.adjacent(v[2], v[3]) && h.adjacent(v[3], v[0]);
    case WitnessTag::Degree2Bristle: {
        if (v.size() != 2 || v[0] == v[1])
            return false;
        auto b = v[0], g = v[1];
        if (! h.looped(b) || h.looped(g) || ! h.adjacent(b, g))
            return false;
        auto gamma_g = h.neighbours(g);
        if (gamma_g.size() < 2)
            return false;
        for (auto u : h.neighbours(b))
            if (u != g && set_intersection(h.neighbours(u), gamma_g).size() != 1)
                return false;
        return true;
    }
    case WitnessTag::XNeighbourhood:
        if (v.size() != 1 || ! h.looped(v[0]))
            return false;
        return is_isomorphic(induced_subgraph(h, neighbourhood(h, v[0])).graph, make_x_graph(w.k1, w.k2, w.k3))
            .has_value();
    }
    return false;
}

auto validate_hbis(const Graph & h, const HbisDecomposition & d) -> bool
{
    auto n = h.vertex_count();
    auto q = d.q;
    if (q < 1 || d.path.size() != q + 2 || d.cliques.size() != q + 1 || d.bristles.size() != q)
        return false;
    for (auto p : d.path)
        if (p >= n)
            return false;
    if (make_vertex_set(d.path).size() != d.path.size())
        return false;

    for (std::size_t i = 0; i <= q; ++i) {
        const auto & k = d.cliques[i];
        if (k != make_vertex_set(k))
            return false;
        for (auto u : k) {
            if (u >= n || ! h.looped(u))
                return false;
            for (auto w : k)
                if (! h.adjacent(u, w))
                    return false;
        }
        if (! set_contains(k, d.path[i]) || ! set_contains(k, d.path[i + 1]))
            return false;
    }
    for (std::size_t i = 0; i <= q; ++i)
        for (std::size_t j = i + 1; j <= q; ++j) {
            auto meet = set_intersection(d.cliques[i], d.cliques[j]);
            if (j == i + 1 ? meet != VertexSet{d.path[j]} : ! meet.empty())
                return false;
        }

    VertexSet all_bristles;
    for (std::size_t i = 1; i <= q; ++i) {
        const auto & b = d.bristle_set(i);
        if (b != make_vertex_set(b))
            return false;
        if (b.size() > d.bristle_bound(i))
            return false;
        for (auto x : b) {
            if (x >= n || h.looped(x) || h.neighbours(x) != VertexSet{d.path[i]})
                return false;
        }
        if (! set_intersection(all_bristles, b).empty())
            return false;
        all_bristles = set_union(all_bristles, b);
    }

    VertexSet covered = all_bristles;
    for (const auto & k : d.cliques)
        covered = set_union(covered, k);
    if (covered.size() != n)
        return false;

    // Edge set: clique edges plus bristle edges and nothing else.
    std::size_t expected = 0;
    VertexSet looped_part;
    for (const auto & k : d.cliques)
        looped_part = set_union(looped_part, k);
    // Loops on every clique vertex.
    expected += looped_part.size();
    for (const auto & k : d.cliques)
        expected += k.size() * (k.size() - 1) / 2;
    expected += all_bristles.size();
    return expected == h.edge_count();
}

auto recognize_hbis(const Graph & h) -> std::optional<HbisDecomposition>
{
    auto n = static_cast<Vertex>(h.vertex_count());
    if (n == 0 || ! is_connected(h))
        return std::nullopt;

    VertexSet looped = looped_vertices(h);
    for (Vertex v = 0; v < n; ++v)
        if (! h.looped(v)) {
            if (h.neighbours(v).size() != 1 || ! h.looped(h.neighbours(v).front()))
                return std::nullopt;
        }

    auto cliques = maximal_cliques(h, looped);
    auto m = cliques.size();
    if (m < 2)
        return std::nullopt;

    // The clique intersection graph must be a path with singleton overlaps.
    std::vector<std::vector<std::size_t>> link(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            auto meet = set_intersection(cliques[i], cliques[j]);
            if (meet.empty())
                continue;
            if (meet.size() != 1)
                return std::nullopt;
            link[i].push_back(j);
            link[j].push_back(i);
        }
    std::size_t ends = 0, start = m;
    std::size_t link_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (link[i].size() > 2 || link[i].empty())
            return std::nullopt;
        link_count += link[i].size();
        if (link[i].size() == 1) {
            ++ends;
            if (start == m)
                start = i;
        }
    }
    if (ends != 2 || link_count / 2 != m - 1)
        return std::nullopt;

    std::vector<std::size_t> chain{start};
    std::size_t prev = m;
    while (chain.size() < m) {
        auto cur = chain.back();
        auto next = link[cur][0] == prev ? (link[cur].size() > 1 ? link[cur][1] : m) : link[cur][0];
        if (next == m)
            return std::nullopt;
        prev = cur;
        chain.push_back(next);
    }

    auto build = [&](const std::vector<std::size_t> & order) -> std::optional<HbisDecomposition> {
        HbisDecomposition d;
        d.q = m - 1;
        for (auto idx : order)
            d.cliques.push_back(cliques[idx]);
        std::vector<Vertex> shared;
        for (std::size_t i = 1; i <= d.q; ++i)
            shared.push_back(set_intersection(d.cliques[i - 1], d.cliques[i]).front());
        auto first_free = [&](const VertexSet & k, Vertex used) -> std::optional<Vertex> {
            for (auto v : k)
                if (v != used)
                    return v;
            return std::nullopt;
        };
        auto p0 = first_free(d.cliques.front(), shared.front());
        auto pend = first_free(d.cliques.back(), shared.back());
        if (! p0 || ! pend)
            return std::nullopt;
        d.path.push_back(*p0);
        d.path.insert(d.path.end(), shared.begin(), shared.end());
        d.path.push_back(*pend);
        for (std::size_t i = 1; i <= d.q; ++i) {
            VertexSet b;
            for (auto w : h.neighbours(d.path[i]))
                if (! h.looped(w))
                    b.push_back(w);
            d.bristles.push_back(b);
        }
        if (! validate_hbis(h, d))
            return std::nullopt;
        return d;
    };

    auto forward = build(chain);
    std::reverse(chain.begin(), chain.end());
    auto backward = build(chain);
    if (forward && backward)
        return backward->path < forward->path ? backward : forward;
    return forward ? forward : backward;
}

auto TriangleExtendedDecomposition::apex_of(std::size_t i) const -> std::optional<Vertex>
{
    auto it = std::lower_bound(apex_indices.begin(), apex_indices.end(), i);
    if (it == apex_indices.end() || *it != i)
        return std::nullopt;
    return apex[static_cast<std::size_t>(it - apex_indices.begin())];
}

auto validate_triangle_extended(const Graph & h, const TriangleExtendedDecomposition & d) -> bool
{
    auto n = h.vertex_count();
    auto q = d.c.size();
    if (q == 0 || d.apex_indices.size() != d.apex.size())
        return false;
    if (d.kind == ExtendedKind::Cycle && q < 3)
        return false;
    std::vector<Vertex> everything = d.c;
    everything.insert(everything.end(), d.apex.begin(), d.apex.end());
    auto vs = make_vertex_set(everything);
    if (vs.size() != everything.size() || vs.size() != n || (! vs.empty() && vs.back() >= n))
        return false;
    if (! h.is_reflexive())
        return false;

    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = i + 1; j < q; ++j) {
            bool consecutive = j == i + 1 || (d.kind == ExtendedKind::Cycle && i == 0 && j == q - 1);
            if (h.adjacent(d.c[i], d.c[j]) != consecutive)
                return false;
        }

    auto limit = d.kind == ExtendedKind::Cycle ? q : q - 1;
    for (std::size_t j = 0; j < d.apex.size(); ++j) {
        auto i = d.apex_indices[j];
        if (i >= limit || (j > 0 && d.apex_indices[j - 1] >= i))
            return false;
        auto want = make_vertex_set({d.apex[j], d.c[i], d.c[(i + 1) % q]});
        if (h.neighbours(d.apex[j]) != want)
            return false;
    }
    return true;
}

auto recognize_triangle_extended(const Graph & h) -> std::optional<TriangleExtendedDecomposition>
{
    if (! h.is_reflexive())
        throw GraphError("triangle-extended recognition requires a reflexive graph");
    auto n = static_cast<Vertex>(h.vertex_count());
    if (n == 0 || ! is_connected(h))
        throw GraphError("triangle-extended recognition requires a connected graph");

    auto finish = [&](ExtendedKind kind, std::vector<Vertex> c) -> std::optional<TriangleExtendedDecomposition> {
        TriangleExtendedDecomposition d;
        d.kind = kind;
        d.c = std::move(c);
        auto q = d.c.size();
        auto cset = make_vertex_set(d.c);
        std::vector<std::pair<std::size_t, Vertex>> apexes;
        for (Vertex v = 0; v < n; ++v) {
            if (set_contains(cset, v))
                continue;
            auto nb = proper_neighbours(h, v);
            if (nb.size() != 2)
                return std::nullopt;
            std::optional<std::size_t> idx;
            auto limit = kind == ExtendedKind::Cycle ? q : q - 1;
            for (std::size_t i = 0; i < limit; ++i)
                if (make_vertex_set({d.c[i], d.c[(i + 1) % q]}) == nb)
                    idx = i;
            if (! idx)
                return std::nullopt;
            apexes.emplace_back(*idx, v);
        }
        std::sort(apexes.begin(), apexes.end());
        for (auto [i, v] : apexes) {
            d.apex_indices.push_back(i);
            d.apex.push_back(v);
        }
        if (! validate_triangle_extended(h, d))
            return std::nullopt;
        return d;
    };

    // A long induced cycle can only be the base cycle.
    if (auto cyc = find_induced_reflexive_cycle(h, 4)) {
        auto cs = make_vertex_set(cyc.vertices);
        return finish(ExtendedKind::Cycle, order_cycle(h, cs));
    }

    // Otherwise every triangle is an apex triangle; its apex has proper degree two.
    VertexSet apexes;
    for (Vertex a = 0; a < n; ++a)
        for (auto b : h.neighbours(a)) {
            if (b <= a)
                continue;
            for (auto c : h.neighbours(b)) {
                if (c <= b || ! h.adjacent(a, c))
                    continue;
                std::optional<Vertex> pick;
                for (auto x : {c, b, a})
                    if (proper_neighbours(h, x).size() == 2) {
                        pick = x;
                        break;
                    }
                if (! pick)
                    return std::nullopt;
                apexes.push_back(*pick);
            }
        }
    apexes = make_vertex_set(apexes);
    auto base = set_difference(all_vertices(h), apexes);
    if (induces_path(h, base))
        if (auto d = finish(ExtendedKind::Path, order_path(h, base)))
            return d;

    // A bare triangle as the base cycle.
    for (Vertex a = 0; a < n; ++a)
        for (auto b : h.neighbours(a)) {
            if (b <= a)
                continue;
            for (auto c : h.neighbours(b)) {
                if (c <= b || ! h.adjacent(a, c))
                    continue;
                if (auto d = finish(ExtendedKind::Cycle, {a, b, c}))
                    return d;
            }
        }
    return std::nullopt;
}

auto universal_vertices(const Graph & h) -> VertexSet
{
    VertexSet out;
    auto n = static_cast<Vertex>(h.vertex_count());
    for (Vertex v = 0; v < n; ++v)
        if (h.neighbours(v).size() == n)
            out.push_back(v);
    return out;
}

auto looped_vertices(const Graph & h) -> VertexSet
{
    VertexSet out;
    auto n = static_cast<Vertex>(h.vertex_count());
    for (Vertex v = 0; v < n; ++v)
        if (h.looped(v))
            out.push_back(v);
    return out;
}

} // namespace retract
