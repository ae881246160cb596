#include "retract/hbis.hpp"
#include "retract/graph_io.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace retract {

auto serialize_csp(const ImpCspInstance & inst) -> std::string
{
    std::ostringstream out;
    for (const auto & v : inst.variables)
        out << "var " << v << '\n';
    for (auto [a, b] : inst.constraints)
        out << "imp " << inst.variables[a] << ' ' << inst.variables[b] << '\n';
    return out.str();
}

auto parse_csp(std::istream & in, const std::string & source) -> ImpCspInstance
{
    ImpCspInstance inst;
    std::map<std::string, std::size_t> index;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#')
            continue;
        if (toks[0] == "var" && toks.size() == 2) {
            if (! inst.constraints.empty())
                throw ParseError(source, lineno, "'var' records must precede 'imp' records");
            if (index.count(toks[1]))
                throw ParseError(source, lineno, "duplicate variable '" + toks[1] + "'");
            index[toks[1]] = inst.variables.size();
            inst.variables.push_back(toks[1]);
        }
        else if (toks[0] == "imp" && toks.size() == 3) {
            auto a = index.find(toks[1]), b = index.find(toks[2]);
            if (a == index.end() || b == index.end())
                throw ParseError(source, lineno, "undeclared variable in 'imp'");
            inst.constraints.emplace_back(a->second, b->second);
        }
        else
            throw ParseError(source, lineno, "expected 'var <name>' or 'imp <x> <y>'");
    }
    auto sorted = inst.constraints;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(source, lineno, "duplicate constraint");
    inst.constraints = sorted;
    return inst;
}

auto vertex_order(const HbisDecomposition & d) -> std::vector<Vertex>
{
    std::vector<Vertex> order{d.path[0]};
    for (std::size_t i = 0; i <= d.q; ++i) {
        for (auto v : d.cliques[i])
            if (v != d.path[i] && v != d.path[i + 1])
                order.push_back(v);
        order.push_back(d.path[i + 1]);
    }
    return order;
}

namespace
{
    auto to_instance(const std::vector<Vertex> & order, const std::vector<std::size_t> & rank,
        const std::vector<std::pair<Vertex, Vertex>> & pairs) -> ImpCspInstance
    {
        ImpCspInstance inst;
        for (std::size_t k = 1; k < order.size(); ++k)
            inst.variables.push_back("x" + std::to_string(order[k]));
        for (auto [u, v] : pairs)
            inst.constraints.emplace_back(rank[u] - 1, rank[v] - 1);
        std::sort(inst.constraints.begin(), inst.constraints.end());
        return inst;
    }

    auto rank_of(const std::vector<Vertex> & order) -> std::vector<std::size_t>
    {
        Vertex top = *std::max_element(order.begin(), order.end());
        std::vector<std::size_t> rank(top + 1, 0);
        for (std::size_t k = 0; k < order.size(); ++k)
            rank[order[k]] = k;
        return rank;
    }

    auto minus(const VertexSet & s, Vertex v) -> VertexSet { return set_difference(s, {v}); }
}

auto build_instances(const HbisDecomposition & d) -> HbisInstances
{
    HbisInstances out;
    out.order = vertex_order(d);
    auto rank = rank_of(out.order);
    auto later = [&](Vertex u, Vertex v) { return rank[u] > rank[v]; };

    for (std::size_t a = 1; a < out.order.size(); ++a)
        for (std::size_t b = 1; b < a; ++b)
            out.u_all.emplace_back(out.order[a], out.order[b]);

    // Pairs removed from U to form Cv and Ce.
    std::vector<std::pair<Vertex, Vertex>> dv, de;
    for (std::size_t i = 1; i <= d.q; ++i) {
        std::vector<std::pair<Vertex, Vertex>> ai;
        for (auto u : minus(d.cliques[i], d.path[i]))
            for (auto v : minus(d.cliques[i - 1], d.path[i - 1]))
                ai.emplace_back(u, v);
        // u ascending, then v descending.
        std::sort(ai.begin(), ai.end(), [&](auto x, auto y) {
            if (x.first != y.first)
                return rank[x.first] < rank[y.first];
            return rank[x.second] > rank[y.second];
        });
        auto take = d.bristle_set(i).size();
        if (take > ai.size())
            throw HbisError("bristle count exceeds the clique bound");
        dv.insert(dv.end(), ai.begin(), ai.begin() + static_cast<std::ptrdiff_t>(take));
    }
    for (std::size_t i = 0; i <= d.q; ++i) {
        auto inner = minus(d.cliques[i], d.path[i]);
        for (auto u : inner)
            for (auto v : inner)
                if (later(u, v))
                    de.emplace_back(u, v);
    }
    std::sort(dv.begin(), dv.end());
    std::sort(de.begin(), de.end());
    for (auto c : out.u_all) {
        if (! std::binary_search(dv.begin(), dv.end(), c))
            out.cv.push_back(c);
        if (! std::binary_search(de.begin(), de.end(), c))
            out.ce.push_back(c);
    }
    out.iv = to_instance(out.order, rank, out.cv);
    out.ie = to_instance(out.order, rank, out.ce);
    return out;
}

auto satisfies(const ImpCspInstance & inst, const BoolAssignment & a) -> bool
{
    if (a.size() != inst.variables.size())
        return false;
    for (auto [x, y] : inst.constraints)
        if (a[x] && ! a[y])
            return false;
    return true;
}

auto satisfying_assignments(const ImpCspInstance & inst, std::size_t max_variables) -> std::vector<BoolAssignment>
{
    auto n = inst.variables.size();
    if (n > max_variables)
        throw HbisError("too many variables to enumerate assignments");
    // Constraints checked once both endpoints are assigned.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> due(n);
    for (auto c : inst.constraints)
        due[std::max(c.first, c.second)].push_back(c);

    std::vector<BoolAssignment> out;
    BoolAssignment cur(n, 0);
    auto go = [&](auto & self, std::size_t k) -> void {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        for (std::uint8_t val : {0, 1}) {
            cur[k] = val;
            bool ok = true;
            for (auto [x, y] : due[k])
                if (cur[x] && ! cur[y]) {
                    ok = false;
                    break;
                }
            if (ok)
                self(self, k + 1);
        }
        cur[k] = 0;
    };
    go(go, 0);
    return out;
}

auto path_assignment(const HbisInstances & inst, Vertex v) -> BoolAssignment
{
    auto rank = rank_of(inst.order);
    BoolAssignment a(inst.order.size() - 1, 0);
    for (std::size_t k = 1; k < inst.order.size(); ++k)
        a[k - 1] = k <= rank.at(v) ? 1 : 0;
    return a;
}

auto bristle_assignment(const HbisInstances & inst, const HbisDecomposition & d, std::size_t i, Vertex a, Vertex b)
    -> BoolAssignment
{
    auto rank = rank_of(inst.order);
    auto ra = rank.at(a), rb = rank.at(b), rp = rank.at(d.path.at(i));
    BoolAssignment out(inst.order.size() - 1, 0);
    for (std::size_t k = 1; k < inst.order.size(); ++k) {
        std::uint8_t val;
        if (k < ra)
            val = 1;
        else if (k <= rp)
            val = 0;
        else if (k <= rb)
            val = 1;
        else
            val = 0;
        out[k - 1] = val;
    }
    return out;
}

auto classify_assignment(const HbisDecomposition & d, const HbisInstances & inst, const BoolAssignment & sigma)
    -> AssignmentKind
{
    auto n = sigma.size();
    if (n + 1 != inst.order.size())
        throw HbisError("assignment size does not match the instance");
    std::size_t first_zero = n, last_one = n;
    for (std::size_t k = 0; k < n; ++k) {
        if (! sigma[k] && first_zero == n)
            first_zero = k;
        if (sigma[k])
            last_one = k;
    }
    AssignmentKind kind;
    if (last_one == n || first_zero == n || last_one < first_zero) {
        // Monotone: ones then zeros.
        kind.tag = AssignmentTag::Path;
        kind.v = last_one == n ? inst.order[0] : inst.order[last_one + 1];
        return kind;
    }
    auto a = inst.order[first_zero + 1], b = inst.order[last_one + 1];
    for (std::size_t i = 1; i <= d.q; ++i) {
        if (! set_contains(minus(d.cliques[i - 1], d.path[i - 1]), a) || ! set_contains(minus(d.cliques[i], d.path[i]), b))
            continue;
        if (bristle_assignment(inst, d, i, a, b) == sigma) {
            kind.tag = AssignmentTag::GoodBristle;
            kind.i = i;
            kind.a = a;
            kind.b = b;
        }
        return kind;
    }
    return kind;
}

auto describe(const AssignmentKind & k) -> std::string
{
    switch (k.tag) {
    case AssignmentTag::Path: return "sigma[" + std::to_string(k.v) + "]";
    case AssignmentTag::GoodBristle:
        return "beta" + std::to_string(k.i) + "[" + std::to_string(k.a) + "," + std::to_string(k.b) + "]";
    case AssignmentTag::Other: return "other";
    }
    return "other";
}

auto build_hve(const ImpCspInstance & iv, const ImpCspInstance & ie) -> HveGraph
{
    if (iv.variables != ie.variables)
        throw HbisError("vertex and edge instances use different variables");
    HveGraph out;
    out.assignments = satisfying_assignments(iv);
    auto m = out.assignments.size();
    out.graph = Graph(m);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = s; t < m; ++t) {
            const auto & x = out.assignments[s];
            const auto & y = out.assignments[t];
            bool ok = true;
            for (auto [a, b] : ie.constraints)
                if ((x[a] && ! y[b]) || (y[a] && ! x[b])) {
                    ok = false;
                    break;
                }
            if (ok)
                out.graph.add_edge(static_cast<Vertex>(s), static_cast<Vertex>(t));
        }
    return out;
}

auto verify_hbis_encoding(const Graph & h) -> HbisEncodingProof
{
    auto d = recognize_hbis(h);
    if (! d)
        throw HbisError("graph is not in the bristled clique-chain class");
    HbisEncodingProof proof;
    proof.decomposition = *d;
    proof.instances = build_instances(*d);
    proof.hve = build_hve(proof.instances.iv, proof.instances.ie);
    const auto & as = proof.hve.assignments;
    for (const auto & a : as)
        proof.kinds.push_back(classify_assignment(*d, proof.instances, a));

    std::map<BoolAssignment, Vertex> where;
    for (std::size_t k = 0; k < as.size(); ++k)
        where[as[k]] = static_cast<Vertex>(k);

    constexpr auto unset = static_cast<Vertex>(-1);
    proof.bijection.assign(h.vertex_count(), unset);
    for (auto v : proof.instances.order) {
        auto it = where.find(path_assignment(proof.instances, v));
        if (it == where.end())
            throw HbisError("path assignment of vertex " + std::to_string(v) + " is not satisfying");
        proof.bijection[v] = it->second;
    }
    for (std::size_t i = 1; i <= d->q; ++i) {
        auto centre = proof.bijection[d->path[i]];
        std::vector<Vertex> attached;
        for (auto w : proof.hve.graph.neighbours(centre)) {
            const auto & k = proof.kinds[w];
            if (k.tag == AssignmentTag::GoodBristle && k.i == i)
                attached.push_back(w);
        }
        const auto & b = d->bristle_set(i);
        if (attached.size() != b.size())
            throw HbisError("bristle count mismatch at p_" + std::to_string(i));
        for (std::size_t j = 0; j < b.size(); ++j)
            proof.bijection[b[j]] = attached[j];
    }
    if (as.size() != h.vertex_count() || std::count(proof.bijection.begin(), proof.bijection.end(), unset) != 0)
        throw HbisError("encoding has " + std::to_string(as.size()) + " vertices, expected "
            + std::to_string(h.vertex_count()));

    proof.explicit_isomorphism = is_isomorphism(h, proof.hve.graph, proof.bijection);
    proof.isomorphic = is_isomorphic(h, proof.hve.graph).has_value();
    if (! proof.explicit_isomorphism || ! proof.isomorphic)
        throw HbisError("encoded graph is not isomorphic to the input");
    return proof;
}

} // namespace retract
