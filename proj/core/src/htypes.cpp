#include "retract/htypes.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace retract {

using boost::multiprecision::pow;

auto HType::b() const -> VertexSet
{
    VertexSet out;
    for (auto [x, y] : t2)
        out.push_back(x);
    return make_vertex_set(out);
}

auto HType::b_prime() const -> VertexSet
{
    VertexSet out;
    for (auto [x, y] : t2)
        out.push_back(y);
    return make_vertex_set(out);
}

auto symmetric(const HType & t) -> HType
{
    HType s;
    s.t1 = t.t3;
    s.t3 = t.t1;
    for (auto [x, y] : t.t2)
        s.t2.emplace_back(y, x);
    std::sort(s.t2.begin(), s.t2.end());
    return s;
}

auto edge_pairs(const Graph & h, const VertexSet & b, const VertexSet & b2) -> std::vector<OrderedEdge>
{
    std::vector<OrderedEdge> out;
    for (auto x : b)
        for (auto y : b2)
            if (h.adjacent(x, y))
                out.emplace_back(x, y);
    return out;
}

auto gamma_set(const Graph & h, const VertexSet & s) -> VertexSet
{
    return common_neighbours(h, s);
}

auto htype_of(const std::vector<Vertex> & image, const JGraph & j, const Graph & h) -> HType
{
    if (image.size() != j.graph.vertex_count())
        throw std::invalid_argument("image size does not match J");
    for (auto [u, v] : j.graph.edges())
        if (image[u] >= h.vertex_count() || image[v] >= h.vertex_count() || ! h.adjacent(image[u], image[v]))
            throw std::invalid_argument("map is not a homomorphism");
    HType t;
    for (auto v : j.a)
        t.t1.push_back(image[v]);
    for (auto v : j.a_prime)
        t.t3.push_back(image[v]);
    for (auto [u, v] : j.matching)
        t.t2.emplace_back(image[u], image[v]);
    t.t1 = make_vertex_set(t.t1);
    t.t3 = make_vertex_set(t.t3);
    std::sort(t.t2.begin(), t.t2.end());
    t.t2.erase(std::unique(t.t2.begin(), t.t2.end()), t.t2.end());
    return t;
}

auto is_nonempty_type(const HType & t, const Graph & h) -> bool
{
    if (t.t1.empty() || t.t2.empty() || t.t3.empty())
        return false;
    for (auto [x, y] : t.t2)
        if (x >= h.vertex_count() || y >= h.vertex_count() || ! h.adjacent(x, y))
            return false;
    for (auto a : t.t1)
        for (auto b : t.b())
            if (! h.adjacent(a, b))
                return false;
    for (auto b : t.b_prime())
        for (auto a : t.t3)
            if (! h.adjacent(a, b))
                return false;
    return true;
}

auto is_maximal_type(const HType & t, const Graph & h) -> bool
{
    if (! is_nonempty_type(t, h))
        return false;
    auto n = static_cast<Vertex>(h.vertex_count());
    auto b = t.b(), b2 = t.b_prime();
    // Non-emptiness is closed under taking sub-types, so single additions suffice.
    for (Vertex x = 0; x < n; ++x) {
        if (! set_contains(t.t1, x) && set_is_subset(b, h.neighbours(x)))
            return false;
        if (! set_contains(t.t3, x) && set_is_subset(b2, h.neighbours(x)))
            return false;
    }
    for (Vertex x = 0; x < n; ++x)
        for (auto y : h.neighbours(x)) {
            if (std::binary_search(t.t2.begin(), t.t2.end(), OrderedEdge{x, y}))
                continue;
            if (set_is_subset(t.t1, h.neighbours(x)) && set_is_subset(t.t3, h.neighbours(y)))
                return false;
        }
    return true;
}

auto gamma_closed_sets(const Graph & h, std::size_t max_vertices) -> std::vector<VertexSet>
{
    auto n = h.vertex_count();
    if (n > max_vertices || n > 24)
        throw std::invalid_argument("too many vertices for closed-set enumeration");
    std::set<VertexSet> found;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        VertexSet s;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1)
                s.push_back(v);
        auto g1 = gamma_set(h, s);
        if (g1.empty())
            continue;
        if (gamma_set(h, g1) == s)
            found.insert(s);
    }
    return {found.begin(), found.end()};
}

auto enumerate_maximal_types(const Graph & h, std::size_t max_vertices) -> std::vector<HType>
{
    auto closed = gamma_closed_sets(h, max_vertices);
    std::set<HType> out;
    for (const auto & b : closed)
        for (const auto & b2 : closed) {
            HType t;
            t.t2 = edge_pairs(h, b, b2);
            if (t.t2.empty() || t.b() != b || t.b_prime() != b2)
                continue;
            t.t1 = gamma_set(h, b);
            t.t3 = gamma_set(h, b2);
            if (! is_maximal_type(t, h))
                continue;
            auto s = symmetric(t);
            out.insert(std::min(t, s));
        }
    return {out.begin(), out.end()};
}

auto nhat(const HType & t, unsigned p, unsigned q, unsigned t_exp) -> BigCount
{
    return pow(BigCount(t.t1.size()), p * t_exp) * pow(BigCount(t.t2.size()), q * t_exp)
        * pow(BigCount(t.t3.size()), p * t_exp);
}

auto type_histogram(const JGraph & j, const Graph & h, std::uint64_t budget) -> std::map<HType, BigCount>
{
    auto lists = full_lists(j.graph, h);
    if (naive_work(lists) > budget)
        throw CountingError("type enumeration exceeds the configured budget");
    std::map<HType, BigCount> out;
    for_each_list_hom(j.graph, lists, h, [&](const std::vector<Vertex> & image) {
        out[htype_of(image, j, h)] += 1;
        return true;
    });
    return out;
}

auto count_type(const HType & t, const JGraph & j, const Graph & h, std::uint64_t budget) -> BigCount
{
    auto hist = type_histogram(j, h, budget);
    auto it = hist.find(t);
    return it == hist.end() ? BigCount(0) : it->second;
}

auto format_set(const VertexSet & s) -> std::string
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i)
        out << (i ? "," : "") << s[i];
    out << '}';
    return out.str();
}

auto format_type(const HType & t) -> std::string
{
    return "A=" + format_set(t.a()) + " B=" + format_set(t.b()) + " B'=" + format_set(t.b_prime())
        + " A'=" + format_set(t.a_prime());
}

auto LogRatio::to_string() const -> std::string
{
    std::ostringstream out;
    out << "log(" << num << ")/log(" << den << ")";
    return out.str();
}

namespace
{
    using Float = boost::multiprecision::cpp_bin_float_50;

    auto log_of(const Rational & r) -> Float
    {
        return log(Float(numerator(r))) - log(Float(denominator(r)));
    }

    auto value_of(const LogRatio & r) -> Float { return log_of(r.num) / log_of(r.den); }

    auto rational_pow(const Rational & r, unsigned e) -> std::pair<BigCount, BigCount>
    {
        return {pow(numerator(r), e), pow(denominator(r), e)};
    }

    auto ratio(unsigned a, unsigned b) -> Rational { return Rational(a, b); }
}

auto log_ratio_below(const LogRatio & r, unsigned q, unsigned p) -> bool
{
    // log a / log b < q / p  <=>  a^p < b^q  (b > 1)
    auto [an, ad] = rational_pow(r.num, p);
    auto [bn, bd] = rational_pow(r.den, q);
    return an * bd < bn * ad;
}

auto log_ratio_above(const LogRatio & r, unsigned q, unsigned p) -> bool
{
    // q / p < log a / log b  <=>  b^q < a^p  (b > 1)
    auto [an, ad] = rational_pow(r.num, p);
    auto [bn, bd] = rational_pow(r.den, q);
    return bn * ad < an * bd;
}

auto find_dominance_params(DominanceVariant variant, unsigned k1) -> DominanceResult
{
    DominanceResult res;
    res.variant = variant;
    res.k1 = k1;
    Graph h;
    VertexSet tri;
    if (variant == DominanceVariant::T5) {
        auto k = k1;
        res.lower = {
            {Rational((3 + k) * (3 + k), 3), ratio(9 + k, 1)},
            {ratio(3 + k, 1), Rational(9 + k, 3)},
            {Rational(3 + k, 3), Rational(9 + k, 3 + k)},
            {ratio(3, 1), Rational(9 + k, 9)},
        };
        res.upper = {ratio(3, 1), Rational(9 + 2 * k, 9 + k)};
        h = make_x_graph(k1, 0, 1);
        tri = {0, static_cast<Vertex>(k1 + 1), static_cast<Vertex>(k1 + 2)};
    }
    else {
        auto k = k1;
        res.lower = {
            {Rational((4 + k) * (4 + k), 3), ratio(10 + k, 1)},
            {ratio(4 + k, 1), Rational(10 + k, 3)},
            {Rational(4 + k, 3), Rational(10 + k, 4 + k)},
            {ratio(3, 1), Rational(10 + k, 9)},
        };
        res.upper = {ratio(3, 1), Rational(12 + 2 * k, 10 + k)};
        h = make_x_graph(k1, 1, 1);
        tri = {0, static_cast<Vertex>(k1 + 2), static_cast<Vertex>(k1 + 3)};
    }

    res.types = enumerate_maximal_types(h);
    auto all = all_vertices(h);
    bool have_dominant = false;
    for (std::size_t i = 0; i < res.types.size(); ++i) {
        const auto & t = res.types[i];
        if ((t.b() == tri && t.b_prime() == all) || (t.b() == all && t.b_prime() == tri)) {
            res.dominant = i;
            have_dominant = true;
        }
    }
    if (! have_dominant) {
        res.note = "dominant type not among the maximal types";
        return res;
    }

    // Decide emptiness of the open interval (max lower, upper).
    auto upper_value = value_of(res.upper);
    const Float eps("1e-40");
    for (const auto & l : res.lower) {
        auto v = value_of(l);
        if (v > upper_value + eps) {
            res.note = "lower bound " + l.to_string() + " exceeds upper bound " + res.upper.to_string();
            return res;
        }
        if (abs(v - upper_value) <= eps) {
            if (l.num == res.upper.num && l.den == res.upper.den) {
                res.exact_tie = true;
                res.note = "lower bound " + l.to_string() + " equals the upper bound exactly";
                return res;
            }
            throw std::runtime_error("dominance bounds agree to 40 digits without being identical");
        }
    }
    res.interval_nonempty = true;

    // Simplest fraction q/p strictly inside the interval.
    unsigned lq = 0, lp = 1, rq = 1, rp = 0;
    for (int step = 0; step < 1'000'000; ++step) {
        unsigned mq = lq + rq, mp = lp + rp;
        bool above_all = std::all_of(res.lower.begin(), res.lower.end(),
            [&](const LogRatio & l) { return log_ratio_below(l, mq, mp); });
        if (! above_all) {
            lq = mq;
            lp = mp;
            continue;
        }
        if (! log_ratio_above(res.upper, mq, mp)) {
            rq = mq;
            rp = mp;
            continue;
        }
        res.q = mq;
        res.p = mp;
        break;
    }
    if (res.p == 0) {
        res.note = "no fraction found within the search limit";
        return res;
    }

    auto dom = nhat(res.types[res.dominant], res.p, res.q, 1);
    res.gamma = 0;
    for (std::size_t i = 0; i < res.types.size(); ++i) {
        if (i == res.dominant)
            continue;
        Rational r(nhat(res.types[i], res.p, res.q, 1), dom);
        if (r > res.gamma)
            res.gamma = r;
    }
    if (res.gamma >= 1)
        res.note = "gamma certificate is not below one";
    return res;
}

} // namespace retract
