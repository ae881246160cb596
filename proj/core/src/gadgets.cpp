#include "retract/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>

namespace retract {

using boost::multiprecision::pow;

auto format_report(const GadgetReport & r) -> std::string
{
    return std::string(r.pass ? "PASS " : "FAIL ") + r.name + " lhs=" + r.lhs.str() + " rhs=" + r.rhs.str();
}

auto enumerate_count(const Graph & g, const ListAssignment & lists, const Graph & h) -> BigCount
{
    std::uint64_t count = 0;
    for_each_list_hom(g, lists, h, [&](const std::vector<Vertex> &) {
        ++count;
        return true;
    });
    return count;
}

auto checked_count(const Graph & g, const ListAssignment & lists, const Graph & h, std::uint64_t budget)
    -> CheckedCount
{
    CheckedCount out;
    auto exact = count_list_homs(g, lists, h);
    if (naive_work(lists) <= budget) {
        out.value = naive_count(g, lists, h, budget);
        out.engine = "naive";
    }
    else {
        out.value = enumerate_count(g, lists, h);
        out.engine = "enumeration";
    }
    out.consistent = out.value == exact;
    return out;
}

namespace
{
    auto copy_with_extra(const Graph & g, std::size_t extra) -> Graph
    {
        Graph out(g.vertex_count() + extra);
        for (auto [u, v] : g.edges())
            out.add_edge(u, v);
        return out;
    }

    auto require_loop_free(const Graph & g) -> void
    {
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.looped(v))
                throw GadgetError("input graph G must be loop-free");
    }

    auto local_index(const InducedSubgraph & sub) -> std::map<Vertex, Vertex>
    {
        std::map<Vertex, Vertex> out;
        for (Vertex i = 0; i < sub.original.size(); ++i)
            out[sub.original[i]] = i;
        return out;
    }

    // Local retraction lists (singleton or full) lifted to H: singletons map
    // to their original vertex, full lists become V(H).
    auto lift_retraction_lists(const InducedSubgraph & sub, const ListAssignment & s_local, std::size_t n,
        const Graph & h) -> std::pair<ListAssignment, ListAssignment>
    {
        ListAssignment local = s_local.empty() ? ListAssignment(n, all_vertices(sub.graph)) : s_local;
        if (local.size() != n)
            throw GadgetError("list count does not match G");
        ListAssignment lifted(n);
        for (std::size_t v = 0; v < n; ++v) {
            local[v] = make_vertex_set(local[v]);
            for (auto x : local[v])
                if (x >= sub.graph.vertex_count())
                    throw GadgetError("list entry outside the target");
            if (local[v].size() == 1)
                lifted[v] = {sub.original[local[v][0]]};
            else if (local[v].size() == sub.graph.vertex_count())
                lifted[v] = all_vertices(h);
            else
                throw GadgetError("lists must be singletons or full");
        }
        return {local, lifted};
    }

    auto describe_engines(const CheckedCount & a, const CheckedCount & b) -> std::string
    {
        return "lhs:" + a.engine + " rhs:" + b.engine;
    }

    auto finish(GadgetReport & r, const CheckedCount & a, const CheckedCount & b) -> void
    {
        r.lhs = a.value;
        r.rhs = b.value;
        r.pass = a.consistent && b.consistent && a.value == b.value;
        r.note = describe_engines(a, b);
        if (! a.consistent || ! b.consistent)
            r.note += " engines disagree";
    }

    auto params_of(std::initializer_list<std::pair<std::string, std::string>> kv) -> std::string
    {
        std::string out;
        for (const auto & [k, v] : kv) {
            if (! out.empty())
                out += ' ';
            out += k + "=" + v;
        }
        return out;
    }

    auto to_s(std::size_t x) -> std::string { return std::to_string(x); }
}

auto build_pin_instance(const Graph & h, Vertex u, const Graph & g, const ListAssignment & s_local)
    -> GadgetInstance
{
    require_loop_free(g);
    auto sub = induced_subgraph(h, neighbourhood(h, u));
    auto n = g.vertex_count();
    auto [local, lifted] = lift_retraction_lists(sub, s_local, n, h);
    GadgetInstance out{copy_with_extra(g, 1), lifted};
    auto w = static_cast<Vertex>(n);
    for (Vertex v = 0; v < n; ++v)
        out.graph.add_edge(v, w);
    out.lists.push_back({u});
    return out;
}

auto verify_pin_neighbourhood(const Graph & h, Vertex u, const Graph & g, const ListAssignment & s_local)
    -> GadgetReport
{
    GadgetReport r;
    r.name = "pin";
    r.params = params_of({{"u", to_s(u)}, {"n", to_s(g.vertex_count())}, {"H", to_s(h.vertex_count())}});
    auto sub = induced_subgraph(h, neighbourhood(h, u));
    auto [local, lifted] = lift_retraction_lists(sub, s_local, g.vertex_count(), h);
    auto inst = build_pin_instance(h, u, g, s_local);
    finish(r, checked_count(g, local, sub.graph), checked_count(inst.graph, inst.lists, h));
    return r;
}

auto build_two_pin_instance(const Graph & h, Vertex b1, Vertex b2, const Graph & g, const ListAssignment & s_local)
    -> GadgetInstance
{
    require_loop_free(g);
    auto sub = induced_subgraph(h, set_intersection(neighbourhood(h, b1), neighbourhood(h, b2)));
    auto n = g.vertex_count();
    auto [local, lifted] = lift_retraction_lists(sub, s_local, n, h);
    GadgetInstance out{copy_with_extra(g, 2), lifted};
    auto w1 = static_cast<Vertex>(n), w2 = static_cast<Vertex>(n + 1);
    for (Vertex v = 0; v < n; ++v) {
        out.graph.add_edge(v, w1);
        out.graph.add_edge(v, w2);
    }
    out.lists.push_back({b1});
    out.lists.push_back({b2});
    return out;
}

auto verify_two_pin(const Graph & h, Vertex b1, Vertex b2, const Graph & g, const ListAssignment & s_local)
    -> GadgetReport
{
    GadgetReport r;
    r.name = "two-pin";
    r.params = params_of({{"b1", to_s(b1)}, {"b2", to_s(b2)}, {"n", to_s(g.vertex_count())}});
    auto sub = induced_subgraph(h, set_intersection(neighbourhood(h, b1), neighbourhood(h, b2)));
    auto [local, lifted] = lift_retraction_lists(sub, s_local, g.vertex_count(), h);
    auto inst = build_two_pin_instance(h, b1, b2, g, s_local);
    finish(r, checked_count(g, local, sub.graph), checked_count(inst.graph, inst.lists, h));
    return r;
}

namespace
{
    auto boost_lists(const Graph & hp, Vertex b, Vertex r1, const Graph & g, const ListAssignment & s)
        -> ListAssignment
    {
        if (b >= hp.vertex_count() || r1 >= hp.vertex_count())
            throw GadgetError("boost vertices out of range");
        if (! hp.looped(b) || hp.looped(r1) || ! hp.adjacent(b, r1))
            throw GadgetError("boost needs b looped, r1 unlooped and b ~ r1");
        if (neighbourhood(hp, b) != all_vertices(hp))
            throw GadgetError("boost target must be the neighbourhood of b");
        VertexSet pair = make_vertex_set({b, r1});
        ListAssignment lists = s.empty() ? ListAssignment(g.vertex_count(), pair) : s;
        if (lists.size() != g.vertex_count())
            throw GadgetError("list count does not match G");
        for (auto & l : lists) {
            l = make_vertex_set(l);
            if (l.empty() || ! set_is_subset(l, pair))
                throw GadgetError("boost lists must be non-empty subsets of {b, r1}");
        }
        return lists;
    }
}

auto build_boost_instance(const Graph & hp, Vertex b, Vertex r1, const Graph & g, const ListAssignment & s,
    unsigned s_size) -> GadgetInstance
{
    require_loop_free(g);
    auto lists = boost_lists(hp, b, r1, g, s);
    auto n = g.vertex_count();
    GadgetInstance out{copy_with_extra(g, 1 + n * s_size), {}};
    for (Vertex v = 0; v < n; ++v)
        out.lists.push_back(lists[v].size() == 1 ? lists[v] : all_vertices(hp));
    auto p = static_cast<Vertex>(n);
    out.lists.push_back({r1});
    Vertex next = p + 1;
    for (Vertex v = 0; v < n; ++v)
        for (unsigned i = 0; i < s_size; ++i) {
            out.graph.add_edge(next, v);
            out.graph.add_edge(next, p);
            out.lists.push_back(all_vertices(hp));
            ++next;
        }
    return out;
}

auto verify_boost_decomposition(const Graph & hp, Vertex b, Vertex r1, const Graph & g, const ListAssignment & s,
    unsigned s_size) -> BoostReport
{
    BoostReport out;
    auto & r = out.report;
    r.name = "boost";
    r.params = params_of({{"n", to_s(g.vertex_count())}, {"s", to_s(s_size)}, {"H", to_s(hp.vertex_count())}});
    auto lists = boost_lists(hp, b, r1, g, s);
    auto inst = build_boost_instance(hp, b, r1, g, s, s_size);
    auto n = g.vertex_count();

    std::uint64_t full = 0, rest = 0;
    for_each_list_hom(inst.graph, inst.lists, hp, [&](const std::vector<Vertex> & image) {
        bool is_full = true;
        for (Vertex v = 0; v < n; ++v)
            if (image[v] != b && image[v] != r1)
                is_full = false;
        ++(is_full ? full : rest);
        return true;
    });
    out.z_star = full;
    out.z0 = rest;
    out.total = count_list_homs(inst.graph, inst.lists, hp);

    auto sub = induced_subgraph(hp, make_vertex_set({b, r1}));
    auto idx = local_index(sub);
    ListAssignment local(n);
    for (Vertex v = 0; v < n; ++v)
        for (auto x : lists[v])
            local[v].push_back(idx.at(x));
    auto target = checked_count(g, local, sub.graph);
    out.target = target.value;

    r.lhs = out.z_star;
    r.rhs = pow(BigCount(2), static_cast<unsigned>(s_size * n)) * out.target;
    r.pass = target.consistent && r.lhs == r.rhs && out.total == out.z_star + out.z0;
    r.note = "lhs:enumeration rhs:" + target.engine + " total=" + out.total.str() + " z0=" + out.z0.str();
    return out;
}

auto check_degree2_hypotheses(const Graph & h, Vertex b, Vertex g) -> void
{
    if (b >= h.vertex_count() || g >= h.vertex_count())
        throw GadgetError("vertex out of range");
    if (! h.looped(b))
        throw GadgetError("b must be looped");
    if (h.looped(g))
        throw GadgetError("g must be unlooped");
    if (! h.adjacent(b, g))
        throw GadgetError("g must be a neighbour of b");
    auto gg = neighbourhood(h, g);
    if (gg.size() < 2)
        throw GadgetError("|Γ(g)| must be at least 2");
    for (auto u : neighbourhood(h, b)) {
        if (u == g)
            continue;
        if (set_intersection(neighbourhood(h, u), gg).size() != 1)
            throw GadgetError("vertex " + std::to_string(u) + " shares more than b with g");
    }
}

auto degree2_exponent(const Graph & h, Vertex b, Vertex g) -> unsigned
{
    auto base = neighbourhood(h, g).size();
    auto target = neighbourhood(h, b).size();
    if (base < 2)
        throw GadgetError("|Γ(g)| must be at least 2");
    unsigned e = 0;
    std::size_t power = 1;
    while (power < target) {
        power *= base;
        ++e;
    }
    return 2 * e;
}

auto build_degree2_blowup(const Graph & h, Vertex b, Vertex g) -> BlowUp
{
    check_degree2_hypotheses(h, b, g);
    auto s = degree2_exponent(h, b, g);
    BigCount copies = pow(BigCount(neighbourhood(h, g).size()), s);
    if (copies > 4096)
        throw GadgetError("blow-up too large");
    auto kept = set_difference(neighbourhood(h, b), {g});
    auto sub = induced_subgraph(h, kept);
    BlowUp out;
    out.kept = kept.size();
    out.original = sub.original;
    out.graph = copy_with_extra(sub.graph, static_cast<std::size_t>(copies));
    auto lb = local_index(sub).at(b);
    for (auto i = static_cast<Vertex>(out.kept); i < out.graph.vertex_count(); ++i)
        out.graph.add_edge(i, lb);
    return out;
}

namespace
{
    auto degree2_lists(const Graph & h, Vertex b, Vertex g, const Graph & gr, const ListAssignment & s)
        -> ListAssignment
    {
        ListAssignment lists = s.empty() ? ListAssignment(gr.vertex_count(), all_vertices(h)) : s;
        if (lists.size() != gr.vertex_count())
            throw GadgetError("list count does not match G");
        auto allowed = set_difference(neighbourhood(h, b), {g});
        for (auto & l : lists) {
            l = make_vertex_set(l);
            if (l.size() == 1 && set_contains(allowed, l[0]))
                continue;
            if (l == all_vertices(h))
                continue;
            throw GadgetError("lists must be V(H) or a singleton in Γ(b) \\ {g}");
        }
        return lists;
    }
}

auto build_degree2_instance(const Graph & h, Vertex b, Vertex g, const Graph & gr, const ListAssignment & s)
    -> GadgetInstance
{
    require_loop_free(gr);
    check_degree2_hypotheses(h, b, g);
    auto lists = degree2_lists(h, b, g, gr, s);
    auto exp = degree2_exponent(h, b, g);
    auto n = gr.vertex_count();
    GadgetInstance out{copy_with_extra(gr, 2 + n * exp), lists};
    auto beta = static_cast<Vertex>(n), gamma = static_cast<Vertex>(n + 1);
    out.lists.push_back({b});
    out.lists.push_back({g});
    for (Vertex v = 0; v < n; ++v)
        out.graph.add_edge(v, beta);
    Vertex next = gamma + 1;
    for (Vertex v = 0; v < n; ++v)
        for (unsigned i = 0; i < exp; ++i) {
            out.graph.add_edge(next, v);
            out.graph.add_edge(next, gamma);
            out.lists.push_back(all_vertices(h));
            ++next;
        }
    return out;
}

auto verify_degree2_bristle(const Graph & h, Vertex b, Vertex g, const Graph & gr, const ListAssignment & s)
    -> Degree2Report
{
    Degree2Report out;
    auto & r = out.report;
    r.name = "degree2-bristle";
    auto exp = degree2_exponent(h, b, g);
    r.params = params_of({{"b", to_s(b)}, {"g", to_s(g)}, {"s", to_s(exp)}, {"n", to_s(gr.vertex_count())}});
    auto lists = degree2_lists(h, b, g, gr, s);
    auto inst = build_degree2_instance(h, b, g, gr, s);
    auto blow = build_degree2_blowup(h, b, g);

    auto n = gr.vertex_count();
    std::map<Vertex, Vertex> to_blow;
    for (Vertex i = 0; i < blow.kept; ++i)
        to_blow[blow.original[i]] = i;
    ListAssignment blow_lists(n);
    for (Vertex v = 0; v < n; ++v)
        blow_lists[v] = lists[v].size() == 1 ? VertexSet{to_blow.at(lists[v][0])} : all_vertices(blow.graph);

    auto nb = induced_subgraph(h, neighbourhood(h, b));
    auto nb_idx = local_index(nb);
    ListAssignment w_lists(n);
    for (Vertex v = 0; v < n; ++v)
        w_lists[v] = lists[v].size() == 1 ? VertexSet{nb_idx.at(lists[v][0])} : all_vertices(nb.graph);
    std::vector<BigCount> weights(nb.graph.vertex_count(), 1);
    weights[nb_idx.at(g)] = pow(BigCount(neighbourhood(h, g).size()), exp);
    out.weighted = count_weighted_list_homs(gr, w_lists, nb.graph, weights);

    auto lhs = checked_count(inst.graph, inst.lists, h);
    auto rhs = checked_count(gr, blow_lists, blow.graph);
    finish(r, lhs, rhs);
    if (out.weighted != rhs.value) {
        r.pass = false;
        r.note += " weighted=" + out.weighted.str();
    }
    return out;
}

auto Wr3Structure::x() const -> std::vector<Vertex>
{
    std::vector<Vertex> out(singles.begin(), singles.end());
    for (auto [x, y] : pairs)
        out.push_back(x);
    return out;
}

auto decompose_wr3_target(const Graph & hb, Vertex b) -> Wr3Structure
{
    if (b >= hb.vertex_count() || ! hb.looped(b))
        throw GadgetError("centre must be a looped vertex");
    if (neighbourhood(hb, b) != all_vertices(hb))
        throw GadgetError("target must be the neighbourhood of its centre");
    Wr3Structure st;
    st.b = b;
    auto looped_other = [&](Vertex v) {
        VertexSet out;
        for (auto w : hb.neighbours(v))
            if (w != v && w != b && hb.looped(w))
                out.push_back(w);
        return out;
    };
    for (Vertex v = 0; v < hb.vertex_count(); ++v) {
        if (v == b)
            continue;
        if (! hb.looped(v)) {
            if (hb.neighbours(v) != VertexSet{b})
                throw GadgetError("unlooped vertex " + std::to_string(v) + " has a neighbour besides the centre");
            st.u.push_back(v);
            continue;
        }
        for (auto w : hb.neighbours(v))
            if (w != b && ! hb.looped(w))
                throw GadgetError("looped vertex " + std::to_string(v) + " has an unlooped neighbour");
        auto others = looped_other(v);
        if (others.empty())
            st.singles.push_back(v);
        else if (others.size() == 1 && looped_other(others[0]) == VertexSet{v}) {
            if (v < others[0])
                st.pairs.emplace_back(v, others[0]);
        }
        else
            throw GadgetError("looped vertex " + std::to_string(v) + " is not a leaf or triangle vertex");
    }
    return st;
}

auto pinned_configuration_list(const Graph & hb, const Wr3Structure & st, Vertex z)
    -> std::vector<std::vector<Vertex>>
{
    std::vector<VertexSet> options;
    for (auto x : st.singles)
        options.push_back(set_intersection(hb.neighbours(z), hb.neighbours(x)));
    std::vector<std::vector<Vertex>> out{{}};
    for (const auto & opt : options) {
        std::vector<std::vector<Vertex>> next;
        for (const auto & prefix : out)
            for (auto o : opt) {
                auto t = prefix;
                t.push_back(o);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

auto pinned_configurations(const Graph & hb, const Wr3Structure & st, Vertex z) -> BigCount
{
    return pinned_configuration_list(hb, st, z).size();
}

auto build_wr3_instance(const CutInstance & inst, const Graph & hb, const Wr3Structure & st, unsigned s, unsigned t)
    -> Wr3Gadget
{
    require_loop_free(inst.g);
    auto q = st.q();
    if (inst.terminals.size() != q)
        throw GadgetError("need one terminal per neighbour clique");
    auto k = st.k();
    auto xs = st.x();
    Wr3Gadget out;
    auto & j = out.instance.graph;
    auto & lists = out.instance.lists;
    auto full = all_vertices(hb);
    auto add = [&](VertexSet list) {
        auto v = j.add_vertex();
        lists.push_back(std::move(list));
        return v;
    };
    for (unsigned i = 0; i < q; ++i)
        out.pins.push_back(add({xs[i]}));
    auto clique = [&](unsigned size) {
        VertexSet c;
        for (unsigned a = 0; a < size; ++a) {
            auto w = add(full);
            c.push_back(w);
            std::vector<Vertex> chain;
            for (unsigned i = 0; i < k; ++i) {
                auto wi = add(full);
                j.add_edge(w, wi);
                j.add_edge(wi, out.pins[i]);
                chain.push_back(wi);
            }
            out.pendants[w] = chain;
        }
        for (auto a : c)
            for (auto b : c)
                if (a < b)
                    j.add_edge(a, b);
        return c;
    };
    for (Vertex v = 0; v < inst.g.vertex_count(); ++v)
        out.vertex_clique.push_back(clique(s));
    for (auto [u, v] : inst.g.edges()) {
        auto c = clique(t);
        for (auto a : c) {
            for (auto x : out.vertex_clique[u])
                j.add_edge(a, x);
            for (auto x : out.vertex_clique[v])
                j.add_edge(a, x);
        }
        out.edge_clique.push_back(c);
    }
    for (unsigned i = 0; i < q; ++i)
        for (auto w : out.vertex_clique[inst.terminals[i]])
            j.add_edge(w, out.pins[i]);
    return out;
}

auto separating_functions(const CutInstance & inst) -> std::vector<std::vector<unsigned>>
{
    auto n = inst.g.vertex_count();
    auto q = static_cast<unsigned>(inst.terminals.size());
    if (q == 0)
        throw GadgetError("need at least one terminal");
    std::vector<int> fixed(n, -1);
    for (unsigned i = 0; i < q; ++i) {
        if (inst.terminals[i] >= n || fixed[inst.terminals[i]] != -1)
            throw GadgetError("terminals must be distinct vertices");
        fixed[inst.terminals[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> phi(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (fixed[v] >= 0)
            phi[v] = static_cast<unsigned>(fixed[v]);
    while (true) {
        out.push_back(phi);
        std::size_t v = 0;
        for (; v < n; ++v) {
            if (fixed[v] >= 0)
                continue;
            if (++phi[v] < q)
                break;
            phi[v] = 0;
        }
        if (v == n)
            break;
    }
    return out;
}

auto cut_size(const Graph & g, const std::vector<unsigned> & phi) -> std::size_t
{
    std::size_t c = 0;
    for (auto [u, v] : g.edges())
        if (phi[u] != phi[v])
            ++c;
    return c;
}

auto mono_sizes(const Graph & g, const std::vector<unsigned> & phi, unsigned colours) -> std::vector<std::size_t>
{
    std::vector<std::size_t> out(colours, 0);
    for (auto [u, v] : g.edges())
        if (phi[u] == phi[v])
            ++out.at(phi[u]);
    return out;
}

auto wr3_zphi_formula(unsigned k, unsigned s, unsigned t, std::size_t n, std::size_t m, std::size_t cut) -> BigCount
{
    auto two_k = BigCount(1) << k;
    auto states = static_cast<unsigned>((1u << k) + 2);
    return pow(stirling2(s, states), static_cast<unsigned>(n)) * pow(two_k, static_cast<unsigned>(t * cut))
        * pow(two_k + 2, static_cast<unsigned>(t * (m - cut)));
}

auto verify_wr3_zphi(const CutInstance & inst, const Graph & hb, Vertex b, unsigned s, unsigned t) -> Wr3Report
{
    Wr3Report out;
    auto & r = out.report;
    auto st = decompose_wr3_target(hb, b);
    auto k = st.k(), q = st.q();
    r.name = "wr3";
    r.params = params_of({{"k", to_s(k)}, {"q", to_s(q)}, {"s", to_s(s)}, {"t", to_s(t)},
        {"n", to_s(inst.g.vertex_count())}, {"m", to_s(inst.g.edge_count())}});
    auto gadget = build_wr3_instance(inst, hb, st, s, t);

    auto xs = st.x();
    std::vector<VertexSet> states;
    for (auto x : xs)
        states.push_back(neighbourhood(hb, x));
    // Required (z, z_1..z_k) tuples per state.
    std::vector<std::set<std::vector<Vertex>>> required(q);
    for (unsigned i = 0; i < q; ++i)
        for (auto z : states[i])
            for (auto cfg : pinned_configuration_list(hb, st, z)) {
                cfg.insert(cfg.begin(), z);
                required[i].insert(std::move(cfg));
            }

    auto n = inst.g.vertex_count();
    std::uint64_t total = 0;
    std::map<std::vector<unsigned>, std::uint64_t> seen;
    std::vector<unsigned> phi(n);
    std::set<std::vector<Vertex>> realised;
    for_each_list_hom(gadget.instance.graph, gadget.instance.lists, hb, [&](const std::vector<Vertex> & image) {
        ++total;
        for (Vertex v = 0; v < n; ++v) {
            VertexSet state;
            for (auto w : gadget.vertex_clique[v])
                state.push_back(image[w]);
            state = make_vertex_set(state);
            auto it = std::find(states.begin(), states.end(), state);
            if (it == states.end())
                return true;
            auto i = static_cast<unsigned>(it - states.begin());
            realised.clear();
            for (auto w : gadget.vertex_clique[v]) {
                std::vector<Vertex> cfg{image[w]};
                for (auto wi : gadget.pendants.at(w))
                    cfg.push_back(image[wi]);
                realised.insert(std::move(cfg));
            }
            if (realised != required[i])
                return true;
            phi[v] = i;
        }
        ++seen[phi];
        return true;
    });
    for (auto & [key, c] : seen)
        out.observed[key] = c;

    auto m = inst.g.edge_count();
    for (const auto & f : separating_functions(inst))
        out.predicted[f] = wr3_zphi_formula(k, s, t, n, m, cut_size(inst.g, f));

    r.lhs = 0;
    r.rhs = 0;
    for (auto & [key, c] : out.observed)
        r.lhs += c;
    for (auto & [key, c] : out.predicted)
        r.rhs += c;
    r.pass = true;
    for (auto & [key, c] : out.observed) {
        auto it = out.predicted.find(key);
        if (it == out.predicted.end() || it->second != c)
            r.pass = false;
    }
    for (auto & [key, c] : out.predicted) {
        auto it = out.observed.find(key);
        if ((it == out.observed.end() ? BigCount(0) : it->second) != c)
            r.pass = false;
    }
    r.note = "enumeration homs=" + std::to_string(total) + " phis=" + std::to_string(out.predicted.size());
    return out;
}

auto build_net_instance(const CutInstance & inst, const Graph & h, const std::array<Vertex, 3> & w,
    const std::array<unsigned, 3> & t) -> GadgetInstance
{
    require_loop_free(inst.g);
    if (inst.terminals.size() != 3)
        throw GadgetError("the net reduction needs exactly three terminals");
    for (auto x : w)
        if (x >= h.vertex_count())
            throw GadgetError("net vertex out of range");
    auto n = inst.g.vertex_count();
    GadgetInstance out{Graph(n), ListAssignment(n, all_vertices(h))};
    std::vector<int> term(n, -1);
    for (int i = 0; i < 3; ++i) {
        term.at(inst.terminals[i]) = i;
        out.lists[inst.terminals[i]] = {w[i]};
    }
    for (Vertex v = 0; v < n; ++v)
        for (auto tau : inst.terminals)
            if (tau != v)
                out.graph.add_edge(v, tau);
    for (auto [u, v] : inst.g.edges())
        for (int i = 0; i < 3; ++i)
            for (unsigned a = 0; a < t[i]; ++a) {
                auto x = out.graph.add_vertex();
                out.lists.push_back(all_vertices(h));
                out.graph.add_edge(x, u);
                out.graph.add_edge(x, v);
                out.graph.add_edge(x, inst.terminals[i]);
            }
    return out;
}

auto net_zphi_formula(const Graph & h, const std::array<Vertex, 3> & w, const std::array<unsigned, 3> & t,
    std::size_t cut, const std::vector<std::size_t> & mono) -> BigCount
{
    unsigned tt = t[0] + t[1] + t[2];
    std::size_t m = cut;
    BigCount product = pow(BigCount(3), static_cast<unsigned>(tt * cut));
    Rational reduced = 1;
    for (int i = 0; i < 3; ++i) {
        auto deg = neighbourhood(h, w[i]).size();
        m += mono[i];
        BigCount edge = pow(BigCount(deg), t[i]) * pow(BigCount(3), tt - t[i]);
        product *= pow(edge, static_cast<unsigned>(mono[i]));
        auto e = static_cast<unsigned>(t[i] * mono[i]);
        reduced *= Rational(pow(BigCount(deg), e), pow(BigCount(3), e));
    }
    reduced *= Rational(pow(BigCount(3), static_cast<unsigned>(tt * m)));
    if (denominator(reduced) != 1)
        throw GadgetError("net Z_phi is not integral");
    if (numerator(reduced) != product)
        throw GadgetError("net Z_phi product and reduced forms disagree");
    return product;
}

auto verify_net_zphi(const CutInstance & inst, const Graph & h, const std::array<Vertex, 3> & w,
    const std::array<unsigned, 3> & t) -> NetReport
{
    NetReport out;
    auto & r = out.report;
    r.name = "net";
    r.params = params_of({{"t1", to_s(t[0])}, {"t2", to_s(t[1])}, {"t3", to_s(t[2])},
        {"n", to_s(inst.g.vertex_count())}, {"m", to_s(inst.g.edge_count())}});
    auto gadget = build_net_instance(inst, h, w, t);
    auto n = inst.g.vertex_count();
    std::map<std::vector<unsigned>, std::uint64_t> seen;
    std::uint64_t escaped = 0;
    std::vector<unsigned> phi(n);
    for_each_list_hom(gadget.graph, gadget.lists, h, [&](const std::vector<Vertex> & image) {
        for (Vertex v = 0; v < n; ++v) {
            auto it = std::find(w.begin(), w.end(), image[v]);
            if (it == w.end()) {
                ++escaped;
                return true;
            }
            phi[v] = static_cast<unsigned>(it - w.begin());
        }
        ++seen[phi];
        return true;
    });
    for (auto & [key, c] : seen)
        out.observed[key] = c;
    for (const auto & f : separating_functions(inst))
        out.predicted[f] = net_zphi_formula(h, w, t, cut_size(inst.g, f), mono_sizes(inst.g, f, 3));
    out.total = count_list_homs(gadget.graph, gadget.lists, h);

    r.lhs = 0;
    r.rhs = 0;
    for (auto & [key, c] : out.observed)
        r.lhs += c;
    for (auto & [key, c] : out.predicted)
        r.rhs += c;
    r.pass = escaped == 0 && out.observed == out.predicted && out.total == r.rhs;
    r.note = "enumeration total=" + out.total.str() + " escaped=" + std::to_string(escaped);
    return out;
}

namespace
{
    auto check_cycle_preconditions(const Graph & h, const TriangleExtendedDecomposition & d, std::size_t ell)
        -> void
    {
        if (d.kind != ExtendedKind::Cycle)
            throw GadgetError("the cycle gadget needs a triangle-extended cycle");
        auto q = d.c.size();
        if (q < 5)
            throw GadgetError("the cycle must have length at least 5");
        if (ell < 1 || ell >= q)
            throw GadgetError("ell must lie in 1..q-1");
        for (std::size_t i = 0; i < q; ++i) {
            if (d.c[i] >= h.vertex_count() || ! h.looped(d.c[i]))
                throw GadgetError("cycle vertices must be looped vertices of H");
            if (! h.adjacent(d.c[i], d.c[(i + 1) % q]))
                throw GadgetError("cycle vertices are not consecutive neighbours");
        }
        if (! is_square_free(h))
            throw GadgetError("H is not square-free");
        if (find_mixed_triangle(h))
            throw GadgetError("H contains a mixed triangle");
    }

    // Appends the doubled path for a segment of length len; pair 0 is the
    // shared attachment pair.
    auto append_half(Graph & j, ListAssignment & lists, const Graph & h, std::pair<Vertex, Vertex> attach,
        std::size_t len, VertexSet pins) -> void
    {
        auto pairs = len % 2 == 0 ? len / 2 : len / 2 + 1;
        std::vector<std::pair<Vertex, Vertex>> chain{attach};
        for (std::size_t i = 1; i < pairs; ++i) {
            auto a = j.add_vertex(), b = j.add_vertex();
            lists.push_back(all_vertices(h));
            lists.push_back(all_vertices(h));
            chain.emplace_back(a, b);
        }
        for (std::size_t i = 0; i < chain.size(); ++i) {
            j.add_edge(chain[i].first, chain[i].second);
            if (i > 0)
                for (auto x : {chain[i - 1].first, chain[i - 1].second})
                    for (auto y : {chain[i].first, chain[i].second})
                        j.add_edge(x, y);
        }
        for (auto c : pins) {
            auto p = j.add_vertex();
            lists.push_back({c});
            j.add_edge(p, chain.back().first);
            j.add_edge(p, chain.back().second);
        }
    }
}

auto build_cycle_gadget(const Graph & h, const TriangleExtendedDecomposition & d, std::size_t ell) -> CycleGadget
{
    check_cycle_preconditions(h, d, ell);
    auto q = d.c.size();
    CycleGadget out;
    out.ell = ell;
    auto & j = out.instance.graph;
    auto & lists = out.instance.lists;
    auto a = j.add_vertex(), b = j.add_vertex();
    lists.push_back(all_vertices(h));
    lists.push_back(all_vertices(h));
    out.attach = {a, b};
    auto c = [&](std::size_t i) { return d.c[i % q]; };
    // P1 = c_0 .. c_ell, pinned at its middle.
    if (ell % 2 == 0)
        append_half(j, lists, h, out.attach, ell, {c(ell / 2)});
    else
        append_half(j, lists, h, out.attach, ell, {c((ell + 1) / 2), c(ell / 2)});
    // P2 = c_ell .. c_{q-1}, c_0, pinned at its middle.
    auto len2 = q - ell;
    if (len2 % 2 == 0)
        append_half(j, lists, h, out.attach, len2, {c((q + ell) / 2)});
    else
        append_half(j, lists, h, out.attach, len2, {c((q + ell + 1) / 2), c((q + ell) / 2)});
    return out;
}

auto substitute_cycle_gadget(const Graph & h, const TriangleExtendedDecomposition & d, std::size_t ell,
    const Graph & g, const ListAssignment & lists) -> GadgetInstance
{
    require_loop_free(g);
    auto gadget = build_cycle_gadget(h, d, ell);
    auto simulated = make_vertex_set({d.c[0], d.c[ell]});
    auto n = g.vertex_count();
    if (lists.size() != n)
        throw GadgetError("list count does not match G");
    GadgetInstance out;
    std::vector<std::vector<Vertex>> image(n); // vertex of G -> its vertices in J
    for (Vertex v = 0; v < n; ++v)
        if (make_vertex_set(lists[v]) != simulated) {
            image[v] = {out.graph.add_vertex()};
            out.lists.push_back(lists[v]);
        }
    const auto & gj = gadget.instance.graph;
    for (Vertex v = 0; v < n; ++v) {
        if (! image[v].empty())
            continue;
        auto offset = static_cast<Vertex>(out.graph.vertex_count());
        for (Vertex x = 0; x < gj.vertex_count(); ++x) {
            out.graph.add_vertex();
            out.lists.push_back(gadget.instance.lists[x]);
        }
        for (auto [x, y] : gj.edges())
            out.graph.add_edge(offset + x, offset + y);
        image[v] = {offset + gadget.attach.first, offset + gadget.attach.second};
    }
    for (auto [u, v] : g.edges())
        for (auto x : image[u])
            for (auto y : image[v])
                out.graph.add_edge(x, y);
    return out;
}

auto verify_cycle_gadget(const Graph & h, const TriangleExtendedDecomposition & d, std::size_t ell) -> GadgetReport
{
    GadgetReport r;
    r.name = "cycle";
    auto q = d.c.size();
    r.params = params_of({{"q", to_s(q)}, {"ell", to_s(ell)}, {"apexes", to_s(d.apex.size())}});
    auto gadget = build_cycle_gadget(h, d, ell);
    auto [a, b] = gadget.attach;
    Vertex c0 = d.c[0], cl = d.c[ell];
    std::uint64_t total = 0, at_c0 = 0, at_cl = 0, stray = 0;
    for_each_list_hom(gadget.instance.graph, gadget.instance.lists, h, [&](const std::vector<Vertex> & image) {
        ++total;
        if (image[a] == image[b] && image[a] == c0)
            ++at_c0;
        else if (image[a] == image[b] && image[a] == cl)
            ++at_cl;
        else
            ++stray;
        return true;
    });

    // Substitution on a path u1 - u2 - x - y with u1, u2 listed {c_0, c_ell}
    // and y pinned to c_1.
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    auto pair = make_vertex_set({c0, cl});
    ListAssignment lists{pair, pair, all_vertices(h), {d.c[1]}};
    auto lhs = checked_count(g, lists, h);
    auto sub = substitute_cycle_gadget(h, d, ell, g, lists);
    auto rhs = checked_count(sub.graph, sub.lists, h);

    r.lhs = total;
    r.rhs = 2;
    r.pass = stray == 0 && at_c0 == 1 && at_cl == 1 && lhs.consistent && rhs.consistent && lhs.value == rhs.value;
    std::ostringstream note;
    note << "c0=" << at_c0 << " cl=" << at_cl << " stray=" << stray << " subst=" << lhs.value << "/" << rhs.value
         << " (" << lhs.engine << "/" << rhs.engine << ")";
    r.note = note.str();
    return r;
}

auto universal_set(const Graph & h) -> VertexSet
{
    VertexSet out;
    for (Vertex v = 0; v < h.vertex_count(); ++v)
        if (h.neighbours(v).size() == h.vertex_count())
            out.push_back(v);
    return out;
}

namespace
{
    using Mask = std::uint32_t;

    auto to_set(Mask m) -> VertexSet
    {
        VertexSet out;
        for (Vertex v = 0; m; ++v, m >>= 1)
            if (m & 1)
                out.push_back(v);
        return out;
    }

    struct KelkSetup
    {
        std::size_t n = 0;
        Mask all = 0, f = 0;
        std::vector<Mask> gamma; // common neighbourhood per subset; gamma[0] = all
    };

    auto kelk_setup(const Graph & h, std::size_t limit, KelkResult & res) -> std::optional<KelkSetup>
    {
        KelkSetup k;
        k.n = h.vertex_count();
        if (k.n > limit)
            throw GadgetError("graph too large for the Kelk scan");
        k.all = k.n == 32 ? ~Mask{0} : (Mask{1} << k.n) - 1;
        res.f = universal_set(h);
        for (auto v : res.f)
            k.f |= Mask{1} << v;
        res.hypothesis_ok = k.f != 0 && k.f != k.all;
        if (! res.hypothesis_ok)
            return std::nullopt;
        std::vector<Mask> nb(k.n, 0);
        for (Vertex v = 0; v < k.n; ++v)
            for (auto w : h.neighbours(v))
                nb[v] |= Mask{1} << w;
        k.gamma.assign(std::size_t{1} << k.n, 0);
        k.gamma[0] = k.all;
        for (Mask m = 1; m <= k.all; ++m) {
            k.gamma[m] = k.gamma[m & (m - 1)] & nb[std::countr_zero(m)];
            if (m == k.all)
                break;
        }
        return k;
    }
}

auto check_kelk_condition(const Graph & h) -> KelkResult
{
    KelkResult res;
    auto setup = kelk_setup(h, 22, res);
    if (! setup)
        return res;
    auto & k = *setup;
    auto bound = static_cast<std::size_t>(std::popcount(k.f)) * k.n;
    for (Mask s = 1; s <= k.all; ++s) {
        if (s != k.f) {
            // T ranges over subsets of Γ(S); take the largest one other than F.
            auto t = k.gamma[s];
            if (t == k.f)
                t &= t - 1;
            if (static_cast<std::size_t>(std::popcount(s)) * std::popcount(t) >= bound) {
                res.counterexample = std::make_pair(to_set(s), to_set(t));
                return res;
            }
        }
        if (s == k.all)
            break;
    }
    res.holds = true;
    return res;
}

auto check_kelk_condition_exhaustive(const Graph & h) -> KelkResult
{
    KelkResult res;
    auto setup = kelk_setup(h, 12, res);
    if (! setup)
        return res;
    auto & k = *setup;
    auto bound = static_cast<std::size_t>(std::popcount(k.f)) * k.n;
    for (Mask s = 0; s <= k.all; ++s)
        for (Mask t = 0; t <= k.all; ++t) {
            if ((s & ~k.gamma[t]) || (t & ~k.gamma[s]))
                continue;
            if (s == k.f || t == k.f)
                continue;
            if (static_cast<std::size_t>(std::popcount(s)) * std::popcount(t) >= bound) {
                res.counterexample = std::make_pair(to_set(s), to_set(t));
                return res;
            }
        }
    res.holds = true;
    return res;
}

} // namespace retract
