#include "retract/counting.hpp"
#include "retract/graph_io.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <unordered_map>

namespace retract {

namespace
{
    using Mask = std::uint64_t;

    auto bit(Vertex v) -> Mask { return Mask{1} << v; }

    struct Problem
    {
        const Graph & g;
        std::vector<Mask> h_adj;
        const std::vector<BigCount> * weights;
        bool unweighted;
    };

    auto prepare(const Graph & g, const ListAssignment & lists, const Graph & h) -> std::vector<Mask>
    {
        if (h.vertex_count() > 64)
            throw CountingError("target graph has more than 64 vertices");
        if (lists.size() != g.vertex_count())
            throw CountingError("list assignment size does not match the source graph");
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (g.looped(v))
                throw CountingError("source graph must be loop-free");
        std::vector<Mask> dom(lists.size(), 0);
        for (std::size_t v = 0; v < lists.size(); ++v)
            for (auto a : lists[v]) {
                if (a >= h.vertex_count())
                    throw CountingError("list references vertex " + std::to_string(a) + " outside the target graph");
                dom[v] |= bit(a);
            }
        return dom;
    }

    auto adjacency_masks(const Graph & h) -> std::vector<Mask>
    {
        std::vector<Mask> out(h.vertex_count(), 0);
        for (Vertex a = 0; a < h.vertex_count(); ++a)
            for (auto b : h.neighbours(a))
                out[a] |= bit(b);
        return out;
    }

    class Counter
    {
      public:
        Counter(const Problem & p, std::vector<Mask> dom) :
            p_(p), dom_(std::move(dom)), stamp_(p.g.vertex_count(), 0)
        {
        }

        auto run() -> BigCount
        {
            for (auto d : dom_)
                if (d == 0)
                    return 0;
            std::vector<Vertex> all(p_.g.vertex_count());
            for (Vertex v = 0; v < all.size(); ++v)
                all[v] = v;
            return solve_set(all);
        }

      private:
        auto weight_sum(Mask m) const -> BigCount
        {
            if (p_.unweighted)
                return std::popcount(m);
            BigCount s = 0;
            while (m) {
                auto a = static_cast<Vertex>(std::countr_zero(m));
                m &= m - 1;
                s += (*p_.weights)[a];
            }
            return s;
        }

        auto components(const std::vector<Vertex> & verts) -> std::vector<std::vector<Vertex>>
        {
            auto in = ++epoch_;
            for (auto v : verts)
                stamp_[v] = in;
            auto done = ++epoch_;
            std::vector<std::vector<Vertex>> out;
            for (auto s : verts) {
                if (stamp_[s] != in)
                    continue;
                std::vector<Vertex> comp{s};
                stamp_[s] = done;
                for (std::size_t i = 0; i < comp.size(); ++i)
                    for (auto w : p_.g.neighbours(comp[i]))
                        if (stamp_[w] == in) {
                            stamp_[w] = done;
                            comp.push_back(w);
                        }
                out.push_back(std::move(comp));
            }
            return out;
        }

        auto solve_set(const std::vector<Vertex> & verts) -> BigCount
        {
            BigCount total = 1;
            for (auto & comp : components(verts)) {
                auto c = solve_component(comp);
                if (c == 0)
                    return 0;
                total *= c;
            }
            return total;
        }

        auto solve_component(const std::vector<Vertex> & comp) -> BigCount
        {
            if (comp.size() == 1)
                return weight_sum(dom_[comp[0]]);

            // A component's count depends only on its vertex set and their current domains.
            auto key = memo_key(comp);
            if (auto it = memo_.find(key); it != memo_.end())
                return it->second;
            auto count = branch(comp);
            if (memo_.size() >= memo_limit)
                memo_.clear();
            memo_.emplace(std::move(key), count);
            return count;
        }

        auto memo_key(const std::vector<Vertex> & comp) const -> std::string
        {
            std::vector<std::uint64_t> words(comp.begin(), comp.end());
            std::sort(words.begin(), words.end());
            auto n = words.size();
            for (std::size_t i = 0; i < n; ++i)
                words.push_back(dom_[words[i]]);
            return {reinterpret_cast<const char *>(words.data()), words.size() * sizeof(std::uint64_t)};
        }

        auto branch(const std::vector<Vertex> & comp) -> BigCount
        {

            std::size_t best = 0;
            for (std::size_t i = 1; i < comp.size(); ++i) {
                auto pi = std::popcount(dom_[comp[i]]), pb = std::popcount(dom_[comp[best]]);
                if (pi < pb || (pi == pb && p_.g.degree(comp[i]) > p_.g.degree(comp[best])))
                    best = i;
            }
            auto x = comp[best];
            std::vector<Vertex> rest;
            rest.reserve(comp.size() - 1);
            for (auto v : comp)
                if (v != x)
                    rest.push_back(v);

            auto in = ++epoch_;
            for (auto v : rest)
                stamp_[v] = in;
            std::vector<Vertex> nbrs;
            for (auto w : p_.g.neighbours(x))
                if (stamp_[w] == in)
                    nbrs.push_back(w);

            BigCount total = 0;
            std::vector<Mask> saved(nbrs.size());
            auto m = dom_[x];
            while (m) {
                auto a = static_cast<Vertex>(std::countr_zero(m));
                m &= m - 1;
                bool ok = true;
                for (std::size_t i = 0; i < nbrs.size(); ++i) {
                    saved[i] = dom_[nbrs[i]];
                    dom_[nbrs[i]] &= p_.h_adj[a];
                    if (dom_[nbrs[i]] == 0)
                        ok = false;
                }
                if (ok) {
                    auto sub = solve_set(rest);
                    if (sub != 0)
                        total += p_.unweighted ? sub : sub * (*p_.weights)[a];
                }
                for (std::size_t i = 0; i < nbrs.size(); ++i)
                    dom_[nbrs[i]] = saved[i];
            }
            return total;
        }

        const Problem & p_;
        std::vector<Mask> dom_;
        std::vector<std::uint64_t> stamp_;
        std::uint64_t epoch_ = 0;
        static constexpr std::size_t memo_limit = 1 << 20;
        std::unordered_map<std::string, BigCount> memo_;
    };
}

auto full_lists(const Graph & g, const Graph & h) -> ListAssignment
{
    return ListAssignment(g.vertex_count(), all_vertices(h));
}

auto parse_lists(std::istream & in, std::size_t g_vertices, std::size_t h_vertices, const std::string & source)
    -> ListAssignment
{
    VertexSet full;
    for (Vertex a = 0; a < h_vertices; ++a)
        full.push_back(a);
    ListAssignment lists(g_vertices, full);
    std::vector<bool> seen(g_vertices, false);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#')
            continue;
        if (toks[0] != "l" || toks.size() < 2)
            throw ParseError(source, lineno, "expected 'l <v> *' or 'l <v> <h1> ...'");
        auto v = detail::parse_uint(toks[1], source, lineno);
        if (v >= g_vertices)
            throw ParseError(source, lineno, "list vertex out of range");
        if (seen[v])
            throw ParseError(source, lineno, "duplicate list for vertex " + toks[1]);
        seen[v] = true;
        if (toks.size() == 3 && toks[2] == "*")
            continue;
        VertexSet s;
        for (std::size_t i = 2; i < toks.size(); ++i) {
            auto a = detail::parse_uint(toks[i], source, lineno);
            if (a >= h_vertices)
                throw ParseError(source, lineno, "list entry " + toks[i] + " is not a target vertex");
            s.push_back(static_cast<Vertex>(a));
        }
        lists[v] = make_vertex_set(std::move(s));
    }
    return lists;
}

auto serialize_lists(const ListAssignment & lists, std::size_t h_vertices) -> std::string
{
    std::ostringstream out;
    for (std::size_t v = 0; v < lists.size(); ++v) {
        out << "l " << v;
        if (lists[v].size() == h_vertices)
            out << " *";
        else
            for (auto a : lists[v])
                out << ' ' << a;
        out << '\n';
    }
    return out.str();
}

auto count_list_homs(const Graph & g, const ListAssignment & lists, const Graph & h) -> BigCount
{
    auto dom = prepare(g, lists, h);
    Problem p{g, adjacency_masks(h), nullptr, true};
    return Counter(p, std::move(dom)).run();
}

auto count_homs(const Graph & g, const Graph & h) -> BigCount
{
    return count_list_homs(g, full_lists(g, h), h);
}

auto count_retractions(const Graph & g, const ListAssignment & lists, const Graph & h) -> BigCount
{
    for (std::size_t v = 0; v < lists.size(); ++v)
        if (lists[v].size() != 1 && lists[v].size() != h.vertex_count())
            throw CountingError("retraction lists must have size 1 or |V(H)|; vertex " + std::to_string(v) + " has "
                + std::to_string(lists[v].size()));
    return count_list_homs(g, lists, h);
}

auto count_weighted_list_homs(const Graph & g, const ListAssignment & lists, const Graph & h,
    const std::vector<BigCount> & weights) -> BigCount
{
    if (weights.size() != h.vertex_count())
        throw CountingError("weight vector size does not match the target graph");
    for (const auto & w : weights)
        if (w < 0)
            throw CountingError("weights must be non-negative");
    auto dom = prepare(g, lists, h);
    Problem p{g, adjacency_masks(h), &weights, false};
    return Counter(p, std::move(dom)).run();
}

auto naive_work(const ListAssignment & lists) -> std::uint64_t
{
    std::uint64_t work = 1;
    for (const auto & l : lists) {
        if (l.empty())
            return 0;
        if (work > std::numeric_limits<std::uint64_t>::max() / l.size())
            return std::numeric_limits<std::uint64_t>::max();
        work *= l.size();
    }
    return work;
}

auto naive_count(const Graph & g, const ListAssignment & lists, const Graph & h, std::uint64_t budget) -> BigCount
{
    prepare(g, lists, h);
    if (naive_work(lists) > budget)
        throw CountingError("naive enumeration exceeds the configured budget");
    auto n = g.vertex_count();
    if (naive_work(lists) == 0)
        return 0;
    auto edges = g.edges();
    std::vector<std::size_t> idx(n, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (! h.adjacent(lists[u][idx[u]], lists[v][idx[v]])) {
                ok = false;
                break;
            }
        if (ok)
            ++count;
        std::size_t i = 0;
        while (i < n && ++idx[i] == lists[i].size())
            idx[i++] = 0;
        if (i == n)
            break;
    }
    return count;
}

auto for_each_list_hom(const Graph & g, const ListAssignment & lists, const Graph & h,
    const std::function<bool(const std::vector<Vertex> &)> & visit) -> void
{
    prepare(g, lists, h);
    auto n = g.vertex_count();
    std::vector<Vertex> image(n, 0);
    bool stop = false;
    std::function<void(Vertex)> go = [&](Vertex v) {
        if (stop)
            return;
        if (v == n) {
            if (! visit(image))
                stop = true;
            return;
        }
        for (auto a : lists[v]) {
            bool ok = true;
            for (auto w : g.neighbours(v))
                if (w < v && ! h.adjacent(image[w], a)) {
                    ok = false;
                    break;
                }
            if (! ok)
                continue;
            image[v] = a;
            go(v + 1);
            if (stop)
                return;
        }
    };
    go(0);
}

auto stirling2(unsigned a, unsigned b) -> BigCount
{
    if (a < b)
        return 0;
    // Inclusion-exclusion over the set of missed values.
    BigCount total = 0;
    BigCount binom = 1;
    for (unsigned j = 0; j <= b; ++j) {
        BigCount term = binom * boost::multiprecision::pow(BigCount(b - j), a);
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
        binom = binom * (b - j) / (j + 1);
    }
    return total;
}

auto check_stirling_bounds(unsigned a, unsigned b) -> bool
{
    if (b < 1)
        throw std::invalid_argument("stirling bounds require b >= 1");
    if (static_cast<double>(a) < 2.0 * b * std::log(2.0 * b))
        throw std::invalid_argument("stirling bounds require a >= 2b ln(2b)");
    auto surj = stirling2(a, b);
    BigCount power = boost::multiprecision::pow(BigCount(b), a);
    return 2 * surj >= power && surj <= power;
}

auto exact_rational(double x) -> Rational
{
    if (! std::isfinite(x))
        throw std::invalid_argument("non-finite value has no rational form");
    int exp = 0;
    double mant = std::frexp(x, &exp);
    // mant * 2^53 is an integer for every finite double.
    auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r = BigCount(scaled);
    if (exp >= 0)
        r *= Rational(BigCount(1) << exp);
    else
        r /= Rational(BigCount(1) << -exp);
    return r;
}

auto dirichlet_bound_holds(const Rational & error, std::uint64_t n, std::size_t d) -> bool
{
    auto e = abs(error);
    Rational power = 1;
    for (std::size_t i = 0; i < d; ++i)
        power *= e;
    return power * n <= 1;
}

auto dirichlet_approx(const std::vector<Rational> & lambda, std::uint64_t n) -> DirichletResult
{
    if (lambda.empty())
        throw std::invalid_argument("dirichlet approximation needs at least one value");
    if (n < 1)
        throw std::invalid_argument("dirichlet approximation needs N >= 1");
    for (const auto & l : lambda)
        if (l <= 0)
            throw std::invalid_argument("dirichlet approximation needs positive values");
    auto d = lambda.size();
    for (std::uint64_t r = 1; r <= n; ++r) {
        DirichletResult res;
        res.r = r;
        bool ok = true;
        for (const auto & l : lambda) {
            Rational x = l * r;
            // Round half-up: floor(x + 1/2).
            Rational shifted = x + Rational(1, 2);
            BigCount t = numerator(shifted) / denominator(shifted);
            auto err = abs(x - Rational(t));
            if (! dirichlet_bound_holds(err, n, d)) {
                ok = false;
                break;
            }
            res.t.push_back(t);
            if (err > res.max_error)
                res.max_error = err;
        }
        if (ok)
            return res;
    }
    throw CountingError("no dirichlet approximation found in range");
}

auto dirichlet_approx(const std::vector<double> & lambda, std::uint64_t n) -> DirichletResult
{
    std::vector<Rational> exact;
    for (auto l : lambda)
        exact.push_back(exact_rational(l));
    return dirichlet_approx(exact, n);
}

auto count_multiterminal_cuts(const CutInstance & inst) -> MultiterminalCutResult
{
    const auto & g = inst.g;
    auto n = g.vertex_count();
    auto q = inst.terminals.size();
    if (q < 1)
        throw CountingError("cut instance needs at least one terminal");
    if (n == 0 || ! is_connected(g))
        throw CountingError("cut instance graph must be connected");
    std::vector<int> fixed(n, -1);
    for (std::size_t i = 0; i < q; ++i) {
        auto t = inst.terminals[i];
        if (t >= n)
            throw CountingError("terminal out of range");
        if (fixed[t] != -1)
            throw CountingError("terminals must be distinct");
        fixed[t] = static_cast<int>(i);
    }
    std::vector<Vertex> free;
    for (Vertex v = 0; v < n; ++v)
        if (fixed[v] == -1)
            free.push_back(v);
    // q^|free| separating functions.
    long double work = std::pow(static_cast<long double>(q), static_cast<long double>(free.size()));
    if (work > 1e9L)
        throw CountingError("too many separating functions to enumerate");

    auto edges = g.edges();
    std::vector<int> phi = fixed;
    for (auto v : free)
        phi[v] = 0;
    MultiterminalCutResult res;
    res.k_min = std::numeric_limits<std::size_t>::max();
    while (true) {
        std::size_t cut = 0;
        for (auto [u, v] : edges)
            if (phi[u] != phi[v])
                ++cut;
        res.k_min = std::min(res.k_min, cut);
        if (cut == inst.k)
            res.count += 1;
        std::size_t i = 0;
        while (i < free.size() && ++phi[free[i]] == static_cast<int>(q))
            phi[free[i++]] = 0;
        if (i == free.size())
            break;
    }
    res.promise_ok = inst.k <= res.k_min;
    return res;
}

auto count_large_cuts(const Graph & g) -> LargeCutResult
{
    auto n = g.vertex_count();
    if (n == 0 || ! is_connected(g))
        throw CountingError("large cut counting requires a connected graph");
    if (n > 30)
        throw CountingError("large cut counting is limited to 30 vertices");
    auto edges = g.edges();
    LargeCutResult res;
    // Vertex 0 stays on side 0 so each unordered bipartition is seen once.
    std::uint64_t limit = std::uint64_t{1} << (n - 1);
    for (std::uint64_t s = 0; s < limit; ++s) {
        auto side = s << 1;
        std::size_t cut = 0;
        for (auto [u, v] : edges)
            if (((side >> u) ^ (side >> v)) & 1)
                ++cut;
        if (cut > res.k_max) {
            res.k_max = cut;
            res.count = 1;
        }
        else if (cut == res.k_max)
            res.count += 1;
    }
    return res;
}

} // namespace retract
