#include "retract/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <string>

namespace retract {

Graph::Graph(std::size_t n) : n_(n), adj_(n) {}

auto Graph::check(Vertex v) const -> void
{
    if (v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) + ")");
}

auto Graph::add_vertex() -> Vertex
{
    adj_.emplace_back();
    return static_cast<Vertex>(n_++);
}

auto Graph::add_edge(Vertex u, Vertex v) -> void
{
    check(u);
    check(v);
    auto & au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        return;
    au.insert(it, v);
    if (u != v) {
        auto & av = adj_[v];
        av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    }
    ++edge_count_;
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    check(u);
    check(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

auto Graph::looped(Vertex v) const -> bool
{
    return adjacent(v, v);
}

auto Graph::neighbours(Vertex v) const -> const VertexSet &
{
    check(v);
    return adj_[v];
}

auto Graph::degree(Vertex v) const -> std::size_t
{
    return neighbours(v).size();
}

auto Graph::proper_degree(Vertex v) const -> std::size_t
{
    return degree(v) - (looped(v) ? 1 : 0);
}

auto Graph::edges() const -> std::vector<std::pair<Vertex, Vertex>>
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u)
        for (auto v : adj_[u])
            if (u <= v)
                out.emplace_back(u, v);
    return out;
}

auto Graph::is_reflexive() const -> bool
{
    for (Vertex v = 0; v < n_; ++v)
        if (! looped(v))
            return false;
    return true;
}

auto Graph::is_irreflexive() const -> bool
{
    for (Vertex v = 0; v < n_; ++v)
        if (looped(v))
            return false;
    return true;
}

auto Graph::operator==(const Graph & other) const -> bool
{
    return n_ == other.n_ && adj_ == other.adj_;
}

auto make_vertex_set(std::vector<Vertex> vs) -> VertexSet
{
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

auto set_intersection(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

auto set_union(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

auto set_contains(const VertexSet & a, Vertex v) -> bool
{
    return std::binary_search(a.begin(), a.end(), v);
}

auto set_is_subset(const VertexSet & a, const VertexSet & b) -> bool
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

auto all_vertices(const Graph & h) -> VertexSet
{
    VertexSet out(h.vertex_count());
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
}

auto neighbourhood(const Graph & h, Vertex v) -> VertexSet
{
    return h.neighbours(v);
}

auto common_neighbours(const Graph & h, const VertexSet & u) -> VertexSet
{
    if (u.empty())
        throw GraphError("common_neighbours: empty vertex set");
    VertexSet out = h.neighbours(u.front());
    for (std::size_t i = 1; i < u.size() && ! out.empty(); ++i)
        out = set_intersection(out, h.neighbours(u[i]));
    return out;
}

auto distance_k_neighbourhood(const Graph & h, Vertex v, unsigned k) -> VertexSet
{
    if (k == 0)
        throw GraphError("distance_k_neighbourhood: k must be positive");
    std::vector<char> cur(h.vertex_count(), 0);
    (void) h.neighbours(v);
    cur[v] = 1;
    for (unsigned step = 0; step < k; ++step) {
        std::vector<char> next(h.vertex_count(), 0);
        for (Vertex u = 0; u < h.vertex_count(); ++u)
            if (cur[u])
                for (auto w : h.neighbours(u))
                    next[w] = 1;
        cur = std::move(next);
    }
    VertexSet out;
    for (Vertex u = 0; u < h.vertex_count(); ++u)
        if (cur[u])
            out.push_back(u);
    return out;
}

auto induced_subgraph(const Graph & h, const VertexSet & u) -> InducedSubgraph
{
    InducedSubgraph out{Graph(u.size()), u};
    std::vector<std::int64_t> index(h.vertex_count(), -1);
    for (std::size_t i = 0; i < u.size(); ++i) {
        (void) h.neighbours(u[i]);
        index[u[i]] = static_cast<std::int64_t>(i);
    }
    for (std::size_t i = 0; i < u.size(); ++i)
        for (auto w : h.neighbours(u[i]))
            if (index[w] >= 0 && static_cast<std::size_t>(index[w]) >= i)
                out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(index[w]));
    return out;
}

auto connected_components(const Graph & h) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    std::vector<char> seen(h.vertex_count(), 0);
    for (Vertex s = 0; s < h.vertex_count(); ++s) {
        if (seen[s])
            continue;
        VertexSet comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[s] = 1;
        while (! q.empty()) {
            auto u = q.front();
            q.pop();
            comp.push_back(u);
            for (auto w : h.neighbours(u))
                if (! seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

auto is_connected(const Graph & h) -> bool
{
    return connected_components(h).size() <= 1;
}

auto is_isomorphism(const Graph & a, const Graph & b, const std::vector<Vertex> & f) -> bool
{
    if (a.vertex_count() != b.vertex_count() || f.size() != a.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<char> hit(b.vertex_count(), 0);
    for (auto x : f) {
        if (x >= b.vertex_count() || hit[x])
            return false;
        hit[x] = 1;
    }
    for (auto [u, v] : a.edges())
        if (! b.adjacent(f[u], f[v]))
            return false;
    return true;
}

namespace
{
    // Iterated colour refinement over the disjoint union so colours are comparable.
    auto refine_colours(const Graph & a, const Graph & b) -> std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
    {
        auto u = disjoint_union(a, b);
        std::size_t n = u.vertex_count();
        std::vector<std::size_t> colour(n);
        for (Vertex v = 0; v < n; ++v)
            colour[v] = u.proper_degree(v) * 2 + (u.looped(v) ? 1 : 0);
        std::size_t classes = 0;
        while (true) {
            std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> sig_ids;
            std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sigs(n);
            for (Vertex v = 0; v < n; ++v) {
                std::vector<std::size_t> ns;
                for (auto w : u.neighbours(v))
                    if (w != v)
                        ns.push_back(colour[w]);
                std::sort(ns.begin(), ns.end());
                sigs[v] = {colour[v], std::move(ns)};
                sig_ids.emplace(sigs[v], 0);
            }
            std::size_t id = 0;
            for (auto & [k, val] : sig_ids)
                val = id++;
            for (Vertex v = 0; v < n; ++v)
                colour[v] = sig_ids[sigs[v]];
            if (sig_ids.size() == classes)
                break;
            classes = sig_ids.size();
        }
        std::vector<std::size_t> ca(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(a.vertex_count()));
        std::vector<std::size_t> cb(colour.begin() + static_cast<std::ptrdiff_t>(a.vertex_count()), colour.end());
        return {ca, cb};
    }
}

auto is_isomorphic(const Graph & a, const Graph & b) -> std::optional<std::vector<Vertex>>
{
    std::size_t n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;
    if (n == 0)
        return std::vector<Vertex>{};

    auto [ca, cb] = refine_colours(a, b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return std::nullopt;
    }

    // Search order: BFS per component, starting from rarest colour, so each vertex
    // after the first in a component has an already-mapped neighbour.
    std::map<std::size_t, std::size_t> freq;
    for (auto c : ca)
        ++freq[c];
    std::vector<Vertex> order;
    std::vector<char> placed(n, 0);
    while (order.size() < n) {
        Vertex start = 0;
        bool found = false;
        for (Vertex v = 0; v < n; ++v)
            if (! placed[v] && (! found || freq[ca[v]] < freq[ca[start]])) {
                start = v;
                found = true;
            }
        std::queue<Vertex> q;
        q.push(start);
        placed[start] = 1;
        while (! q.empty()) {
            auto v = q.front();
            q.pop();
            order.push_back(v);
            for (auto w : a.neighbours(v))
                if (! placed[w]) {
                    placed[w] = 1;
                    q.push(w);
                }
        }
    }

    std::vector<Vertex> f(n, 0);
    std::vector<char> used(n, 0);
    std::vector<char> mapped(n, 0);

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == n)
            return true;
        auto v = order[depth];
        // Candidates: neighbours of the image of a mapped neighbour, when one exists.
        std::optional<Vertex> anchor;
        for (auto w : a.neighbours(v))
            if (w != v && mapped[w]) {
                anchor = w;
                break;
            }
        std::vector<Vertex> candidates;
        if (anchor)
            candidates = b.neighbours(f[*anchor]);
        else {
            candidates.resize(n);
            std::iota(candidates.begin(), candidates.end(), Vertex{0});
        }
        for (auto x : candidates) {
            if (used[x] || cb[x] != ca[v])
                continue;
            bool ok = true;
            for (auto w : a.neighbours(v))
                if (w != v && mapped[w] && ! b.adjacent(f[w], x)) {
                    ok = false;
                    break;
                }
            if (! ok)
                continue;
            // Non-edges must map to non-edges: compare mapped-neighbour counts.
            std::size_t mapped_nbrs_a = 0, mapped_nbrs_b = 0;
            for (auto w : a.neighbours(v))
                if (w != v && mapped[w])
                    ++mapped_nbrs_a;
            for (auto y : b.neighbours(x))
                if (y != x && used[y])
                    ++mapped_nbrs_b;
            if (mapped_nbrs_a != mapped_nbrs_b)
                continue;
            f[v] = x;
            used[x] = 1;
            mapped[v] = 1;
            if (extend(depth + 1))
                return true;
            used[x] = 0;
            mapped[v] = 0;
        }
        return false;
    };

    if (! extend(0))
        return std::nullopt;
    return f;
}

auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    Graph out(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges())
        out.add_edge(u, v);
    auto off = static_cast<Vertex>(a.vertex_count());
    for (auto [u, v] : b.edges())
        out.add_edge(u + off, v + off);
    return out;
}

auto relabel(const Graph & h, const std::vector<Vertex> & perm) -> Graph
{
    if (perm.size() != h.vertex_count())
        throw GraphError("relabel: permutation size mismatch");
    Graph out(h.vertex_count());
    for (auto [u, v] : h.edges())
        out.add_edge(perm[u], perm[v]);
    return out;
}

} // namespace retract
