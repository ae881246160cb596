#include "cli.hpp"

#include "retract/classifier.hpp"
#include "retract/counting.hpp"
#include "retract/families.hpp"
#include "retract/gadgets.hpp"
#include "retract/graph.hpp"
#include "retract/graph_io.hpp"
#include "retract/hbis.hpp"
#include "retract/htypes.hpp"
#include "retract/structure.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace retract::cli {

namespace {

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Reports a gadget hypothesis violation as a FAIL line.
class HypothesisFail : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct Io
{
    std::istream & in;
    std::ostream & out;
    std::ostream & err;
};

auto open_input(const std::string & path, Io & io, std::ifstream & file) -> std::istream &
{
    if (path == "-")
        return io.in;
    file.open(path);
    if (! file)
        throw UsageError("cannot open " + path);
    return file;
}

auto load_graph(const std::string & path, Io & io) -> Graph
{
    std::ifstream file;
    auto & in = open_input(path, io, file);
    return parse_graph(in, path == "-" ? "<stdin>" : path);
}

auto load_lists(const std::string & path, std::size_t g_vertices, std::size_t h_vertices, Io & io) -> ListAssignment
{
    std::ifstream file;
    auto & in = open_input(path, io, file);
    return parse_lists(in, g_vertices, h_vertices, path == "-" ? "<stdin>" : path);
}

auto parse_count(const std::string & text, const std::string & what) -> unsigned
{
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(text, &pos);
    }
    catch (const std::exception &) {
        throw UsageError("expected a non-negative integer for " + what + ", got '" + text + "'");
    }
    if (pos != text.size() || value > 1'000'000)
        throw UsageError("expected a non-negative integer for " + what + ", got '" + text + "'");
    return static_cast<unsigned>(value);
}

auto parse_size_list(const std::string & text, const std::string & what) -> std::vector<std::size_t>
{
    std::vector<std::size_t> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        values.push_back(parse_count(item, what));
    return values;
}

auto join(const std::vector<Vertex> & vs) -> std::string
{
    std::string s;
    for (auto v : vs) {
        if (! s.empty())
            s += ' ';
        s += std::to_string(v);
    }
    return s;
}

auto witness_name(const StructuralWitness & w) -> std::string
{
    auto name = to_string(w.tag);
    if (w.tag == WitnessTag::XNeighbourhood)
        name += "(" + std::to_string(w.k1) + "," + std::to_string(w.k2) + "," + std::to_string(w.k3) + ")";
    return name;
}

// ---- classify --------------------------------------------------------------

auto cmd_classify(const std::string & path, bool show_witness, Io & io) -> int
{
    auto h = load_graph(path, io);
    auto verdict = classify(h);
    for (std::size_t i = 0; i < verdict.components.size(); ++i) {
        const auto & c = verdict.components[i];
        io.out << "component " << i << ": " << to_string(c.tag) << '\n';
        if (show_witness && c.witness)
            io.out << "witness " << i << ": " << witness_name(c.witness) << ' ' << join(c.witness.vertices) << '\n';
    }
    io.out << "verdict: " << to_string(verdict.verdict) << '\n';
    return 0;
}

// ---- count -------------------------------------------------------------------

auto cmd_count(const std::string & mode, const std::string & g_path, const std::string & h_path,
    const std::string & lists_path, Io & io) -> int
{
    auto g = load_graph(g_path, io);
    auto h = load_graph(h_path, io);
    auto lists = lists_path.empty() ? full_lists(g, h) : load_lists(lists_path, g.vertex_count(), h.vertex_count(), io);
    BigCount result;
    if (mode == "hom") {
        if (! lists_path.empty())
            throw UsageError("--lists is not accepted with --mode hom");
        result = count_homs(g, h);
    }
    else if (mode == "lhom")
        result = count_list_homs(g, lists, h);
    else
        result = count_retractions(g, lists, h);
    io.out << result << '\n';
    return 0;
}

// ---- hbis-encode / hbis-verify ----------------------------------------------

auto cmd_hbis_encode(const std::string & path, Io & io) -> int
{
    auto h = load_graph(path, io);
    auto d = recognize_hbis(h);
    if (! d) {
        io.out << "FAIL hbis-encode not a member of H_BIS\n";
        return 1;
    }
    auto inst = build_instances(*d);
    auto hve = build_hve(inst.iv, inst.ie);
    io.out << "# Iv\n" << serialize_csp(inst.iv);
    io.out << "# Ie\n" << serialize_csp(inst.ie);
    io.out << "# Hve\n" << serialize_graph(hve.graph);
    return 0;
}

auto cmd_hbis_verify(const std::string & path, Io & io) -> int
{
    auto h = load_graph(path, io);
    try {
        auto proof = verify_hbis_encoding(h);
        const auto & d = proof.decomposition;
        io.out << "Q " << d.q << '\n';
        io.out << "path " << join(d.path) << '\n';
        for (std::size_t i = 0; i < d.cliques.size(); ++i)
            io.out << "K" << i << ' ' << join(d.cliques[i]) << '\n';
        for (std::size_t i = 1; i <= d.q; ++i)
            io.out << "B" << i << ' ' << join(d.bristle_set(i)) << '\n';
        io.out << "Iv " << proof.instances.iv.constraints.size() << " constraints\n";
        io.out << "Ie " << proof.instances.ie.constraints.size() << " constraints\n";
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            auto s = proof.bijection[v];
            io.out << "map " << v << " -> " << s << ' ' << describe(proof.kinds[s]) << '\n';
        }
        bool ok = proof.explicit_isomorphism && proof.isomorphic;
        io.out << (ok ? "PASS" : "FAIL") << " hbis-verify vertices=" << proof.hve.graph.vertex_count() << '\n';
        return ok ? 0 : 1;
    }
    catch (const HbisError & e) {
        io.out << "FAIL hbis-verify " << e.what() << '\n';
        return 1;
    }
}

// ---- gen -------------------------------------------------------------------

auto cmd_gen(const std::string & kind, const std::vector<std::string> & rest, Io & io) -> int
{
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (rest.size() < lo || rest.size() > hi)
            throw UsageError("wrong number of arguments for gen " + kind);
    };
    Graph g;
    if (kind == "x") {
        need(3, 3);
        g = make_x_graph(parse_count(rest[0], "k1"), parse_count(rest[1], "k2"), parse_count(rest[2], "k3"));
    }
    else if (kind == "wr") {
        need(1, 1);
        g = make_wr(parse_count(rest[0], "q"));
    }
    else if (kind == "net") {
        need(0, 0);
        g = make_net();
    }
    else if (kind == "tec") {
        need(2, 1000);
        ExtendedKind ek;
        if (rest[0] == "cycle")
            ek = ExtendedKind::Cycle;
        else if (rest[0] == "path")
            ek = ExtendedKind::Path;
        else
            throw UsageError("gen tec expects cycle or path, got '" + rest[0] + "'");
        std::vector<std::size_t> apex;
        for (std::size_t i = 2; i < rest.size(); ++i)
            apex.push_back(parse_count(rest[i], "apex index"));
        g = make_triangle_extended(ek, parse_count(rest[1], "q"), apex);
    }
    else if (kind == "hbis") {
        need(2, 2);
        g = make_hbis(parse_size_list(rest[0], "clique size"), parse_size_list(rest[1], "bristle count"));
    }
    else
        throw UsageError("unknown family '" + kind + "'");
    io.out << serialize_graph(g);
    return 0;
}

// ---- gadget-verify -----------------------------------------------------------

struct GadgetOptions
{
    std::string name;
    std::string h_path, g_path, lists_path;
    std::optional<unsigned> u, b1, b2, b, r1, g, ell, s;
    unsigned k = 0, t = 1, q = 5;
    std::vector<unsigned> ts;
    std::vector<std::size_t> apex;
    std::vector<unsigned> terminals;
};

auto irreflexive_edge() -> Graph
{
    return make_path(2, Loops::None);
}

auto gadget_graph(const GadgetOptions & o, Io & io, Graph fallback) -> Graph
{
    return o.g_path.empty() ? fallback : load_graph(o.g_path, io);
}

auto gadget_lists(const GadgetOptions & o, const Graph & g, std::size_t h_vertices, Io & io) -> ListAssignment
{
    return o.lists_path.empty() ? ListAssignment{} : load_lists(o.lists_path, g.vertex_count(), h_vertices, io);
}

auto cut_instance(const GadgetOptions & o, Io & io, Graph fallback, std::vector<Vertex> fallback_terminals) -> CutInstance
{
    CutInstance inst;
    inst.g = gadget_graph(o, io, std::move(fallback));
    if (o.terminals.empty())
        inst.terminals = std::move(fallback_terminals);
    else
        inst.terminals.assign(o.terminals.begin(), o.terminals.end());
    if (inst.terminals.size() != 3)
        throw UsageError("exactly three terminals are required");
    return inst;
}

auto emit(const GadgetReport & r, Io & io) -> bool
{
    io.out << format_report(r) << '\n';
    return r.pass;
}

auto cmd_gadget(const GadgetOptions & o, Io & io) -> int
{
    bool pass = true;
    if (o.name == "pin") {
        auto h = o.h_path.empty() ? make_net() : load_graph(o.h_path, io);
        auto u = o.u.value_or(0);
        auto g = gadget_graph(o, io, make_path(3, Loops::None));
        ListAssignment local;
        if (! o.lists_path.empty() && u < h.vertex_count())
            local = load_lists(o.lists_path, g.vertex_count(), neighbourhood(h, u).size(), io);
        pass = emit(verify_pin_neighbourhood(h, u, g, local), io);
    }
    else if (o.name == "two-pin") {
        auto h = o.h_path.empty() ? make_x_graph(1, 0, 1) : load_graph(o.h_path, io);
        auto b1 = o.b1.value_or(0);
        auto b2 = o.b2.value_or(2);
        auto g = gadget_graph(o, io, irreflexive_edge());
        ListAssignment local;
        if (! o.lists_path.empty() && b1 < h.vertex_count() && b2 < h.vertex_count())
            local = load_lists(o.lists_path, g.vertex_count(),
                common_neighbours(h, VertexSet{b1, b2}).size(), io);
        pass = emit(verify_two_pin(h, b1, b2, g, local), io);
    }
    else if (o.name == "boost") {
        Graph hp(3);
        if (o.h_path.empty()) {
            hp.add_edge(0, 0);
            hp.add_edge(0, 1);
            hp.add_edge(0, 2);
            hp.add_edge(1, 2);
        }
        else
            hp = load_graph(o.h_path, io);
        auto b = o.b.value_or(0);
        auto r1 = o.r1.value_or(1);
        auto g = gadget_graph(o, io, irreflexive_edge());
        auto s = gadget_lists(o, g, hp.vertex_count(), io);
        if (s.empty())
            s.assign(g.vertex_count(), b < r1 ? VertexSet{b, r1} : VertexSet{r1, b});
        auto r = verify_boost_decomposition(hp, b, r1, g, s, o.s.value_or(2));
        io.out << "zstar=" << r.z_star << " z0=" << r.z0 << " target=" << r.target << " total=" << r.total << '\n';
        pass = emit(r.report, io);
    }
    else if (o.name == "degree2-bristle") {
        Graph h;
        if (o.h_path.empty()) {
            h = make_x_graph(1, 0, 1);
            auto z = h.add_vertex();
            h.add_edge(1, z);
        }
        else
            h = load_graph(o.h_path, io);
        auto b = o.b.value_or(0);
        auto g = o.g.value_or(1);
        auto gr = gadget_graph(o, io, irreflexive_edge());
        auto r = verify_degree2_bristle(h, b, g, gr, gadget_lists(o, gr, h.vertex_count(), io));
        pass = emit(r.report, io);
    }
    else if (o.name == "wr3") {
        if (o.k > 1 && o.h_path.empty())
            throw UsageError("--k must be 0 or 1 without --H");
        auto hb = o.h_path.empty() ? make_x_graph(0, o.k, 3 - o.k) : load_graph(o.h_path, io);
        auto inst = cut_instance(o, io, make_complete(3, Loops::None), {0, 1, 2});
        auto r = verify_wr3_zphi(inst, hb, o.b.value_or(0), o.s.value_or(3), o.t);
        pass = emit(r.report, io);
    }
    else if (o.name == "net") {
        Graph star(4);
        for (Vertex v = 1; v < 4; ++v)
            star.add_edge(0, v);
        auto inst = cut_instance(o, io, star, {1, 2, 3});
        auto h = o.h_path.empty() ? make_net() : load_graph(o.h_path, io);
        std::array<unsigned, 3> t{1, 1, 1};
        if (! o.ts.empty()) {
            if (o.ts.size() != 3)
                throw UsageError("--t expects three values");
            std::copy(o.ts.begin(), o.ts.end(), t.begin());
        }
        auto r = verify_net_zphi(inst, h, {0, 1, 2}, t);
        pass = emit(r.report, io);
    }
    else if (o.name == "cycle") {
        Graph h;
        TriangleExtendedDecomposition d;
        if (o.h_path.empty()) {
            h = make_triangle_extended(ExtendedKind::Cycle, o.q, o.apex);
            d.kind = ExtendedKind::Cycle;
            for (Vertex i = 0; i < o.q; ++i)
                d.c.push_back(i);
            d.apex_indices = o.apex;
            std::sort(d.apex_indices.begin(), d.apex_indices.end());
            for (std::size_t j = 0; j < d.apex_indices.size(); ++j)
                d.apex.push_back(static_cast<Vertex>(o.q + j));
        }
        else {
            h = load_graph(o.h_path, io);
            auto found = recognize_triangle_extended(h);
            if (! found)
                throw HypothesisFail("not a triangle-extended cycle");
            d = *found;
        }
        std::vector<std::size_t> ells;
        if (o.ell)
            ells.push_back(*o.ell);
        else
            for (std::size_t l = 1; l < d.c.size(); ++l)
                ells.push_back(l);
        for (auto l : ells)
            pass = emit(verify_cycle_gadget(h, d, l), io) && pass;
    }
    else if (o.name == "kelk") {
        auto h = o.h_path.empty() ? make_x_graph(7, 0, 1) : load_graph(o.h_path, io);
        auto r = check_kelk_condition(h);
        if (! r.hypothesis_ok) {
            io.out << "FAIL kelk hypothesis F(H) nonempty and proper violated\n";
            return 1;
        }
        if (r.holds)
            io.out << "PASS kelk F=" << format_set(r.f) << '\n';
        else
            io.out << "FAIL kelk S=" << format_set(r.counterexample->first)
                   << " T=" << format_set(r.counterexample->second) << '\n';
        pass = r.holds;
    }
    else
        throw UsageError("unknown gadget '" + o.name + "'");
    return pass ? 0 : 1;
}

// ---- types-table ---------------------------------------------------------------

auto cmd_types_table(const std::string & path, unsigned p, unsigned q, unsigned t, Io & io) -> int
{
    auto h = load_graph(path, io);
    auto types = enumerate_maximal_types(h);
    std::optional<std::map<HType, BigCount>> histogram;
    auto j = make_j_graph(p, q, t);
    try {
        histogram = type_histogram(j, h);
    }
    catch (const CountingError &) {
        // N is omitted when enumeration exceeds the budget.
    }
    for (std::size_t i = 0; i < types.size(); ++i) {
        const auto & ty = types[i];
        io.out << 'T' << i + 1 << " A=" << format_set(ty.a()) << " B=" << format_set(ty.b())
               << " B'=" << format_set(ty.b_prime()) << " A'=" << format_set(ty.a_prime())
               << " nhat=" << nhat(ty, p, q, t);
        if (histogram) {
            auto it = histogram->find(ty);
            io.out << " n=" << (it == histogram->end() ? BigCount(0) : it->second);
        }
        io.out << '\n';
    }
    return 0;
}

// ---- cuts ------------------------------------------------------------------------

auto cmd_cuts(const std::string & path, const std::vector<unsigned> & terminals, std::optional<unsigned> k, Io & io)
    -> int
{
    auto g = load_graph(path, io);
    if (terminals.empty()) {
        auto r = count_large_cuts(g);
        io.out << "kmax=" << r.k_max << " count=" << r.count;
        if (k)
            io.out << " promise=" << (r.k_max >= *k ? "ok" : "violated");
        io.out << '\n';
        return 0;
    }
    CutInstance inst{g, std::vector<Vertex>(terminals.begin(), terminals.end()), 0};
    auto r = count_multiterminal_cuts(inst);
    inst.k = k.value_or(r.k_min);
    if (inst.k != 0)
        r = count_multiterminal_cuts(inst);
    io.out << "kmin=" << r.k_min << " k=" << inst.k << " count=" << r.count
           << " promise=" << (r.promise_ok ? "ok" : "violated") << '\n';
    return 0;
}

} // namespace

auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    Io io{in, out, err};
    CLI::App app{"Counting list homomorphisms and retractions to small graphs", "retract"};
    app.require_subcommand(1);

    std::string h_path, g_path, lists_path, mode = "hom";
    bool show_witness = false;
    auto * classify_cmd = app.add_subcommand("classify", "Classify the retraction counting problem for H");
    classify_cmd->add_option("H", h_path, "graph file, or - for stdin")->required();
    classify_cmd->add_flag("--witness", show_witness, "print structural witnesses of hard components");

    auto * count_cmd = app.add_subcommand("count", "Count homomorphisms, list homomorphisms or retractions");
    count_cmd->add_option("--mode", mode, "hom, lhom or ret")->check(CLI::IsMember({"hom", "lhom", "ret"}));
    count_cmd->add_option("G", g_path, "source graph")->required();
    count_cmd->add_option("H", h_path, "target graph")->required();
    count_cmd->add_option("--lists", lists_path, "lists file");

    auto * encode_cmd = app.add_subcommand("hbis-encode", "Emit Iv, Ie and Hve for a member of H_BIS");
    encode_cmd->add_option("H", h_path)->required();
    auto * verify_cmd = app.add_subcommand("hbis-verify", "Check the encoding isomorphism for a member of H_BIS");
    verify_cmd->add_option("H", h_path)->required();

    std::string family;
    std::vector<std::string> gen_args;
    auto * gen_cmd = app.add_subcommand("gen", "Generate a graph: x k1 k2 k3 | wr q | net | tec cycle|path q I... | "
                                               "hbis sizes bristles");
    gen_cmd->add_option("family", family)->required();
    gen_cmd->add_option("args", gen_args);

    GadgetOptions go;
    auto * gadget_cmd = app.add_subcommand("gadget-verify", "Check a gadget identity by explicit enumeration");
    gadget_cmd->add_option("name", go.name, "pin, two-pin, boost, degree2-bristle, wr3, net, cycle, kelk")->required();
    gadget_cmd->add_option("--H", go.h_path, "target graph");
    gadget_cmd->add_option("--G", go.g_path, "source graph");
    gadget_cmd->add_option("--lists", go.lists_path, "lists file");
    gadget_cmd->add_option("--u", go.u);
    gadget_cmd->add_option("--b1", go.b1);
    gadget_cmd->add_option("--b2", go.b2);
    gadget_cmd->add_option("--b", go.b);
    gadget_cmd->add_option("--r1", go.r1);
    gadget_cmd->add_option("--g", go.g);
    gadget_cmd->add_option("--s", go.s);
    gadget_cmd->add_option("--k", go.k);
    gadget_cmd->add_option("--t", go.ts, "t (wr3) or t1 t2 t3 (net)");
    gadget_cmd->add_option("--q", go.q, "cycle length");
    gadget_cmd->add_option("--apex", go.apex, "apex indices");
    gadget_cmd->add_option("--ell", go.ell);
    gadget_cmd->add_option("--terminals", go.terminals);

    unsigned p = 1, q = 1, t = 1;
    auto * types_cmd = app.add_subcommand("types-table", "Maximal H-types with nhat and, when feasible, N");
    types_cmd->add_option("H", h_path)->required();
    types_cmd->add_option("--p", p);
    types_cmd->add_option("--q", q);
    types_cmd->add_option("--t", t);

    std::vector<unsigned> terminals;
    std::optional<unsigned> cut_k;
    auto * cuts_cmd = app.add_subcommand("cuts", "Multiterminal cuts, or maximum cuts without terminals");
    cuts_cmd->add_option("G", g_path)->required();
    cuts_cmd->add_option("--terminals", terminals);
    cuts_cmd->add_option("-K", cut_k);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError & e) {
        err << "retract: " << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (*classify_cmd)
            return cmd_classify(h_path, show_witness, io);
        if (*count_cmd)
            return cmd_count(mode, g_path, h_path, lists_path, io);
        if (*encode_cmd)
            return cmd_hbis_encode(h_path, io);
        if (*verify_cmd)
            return cmd_hbis_verify(h_path, io);
        if (*gen_cmd)
            return cmd_gen(family, gen_args, io);
        if (*gadget_cmd) {
            if (go.name == "wr3" && ! go.ts.empty()) {
                if (go.ts.size() != 1)
                    throw UsageError("--t expects one value for wr3");
                go.t = go.ts.front();
            }
            return cmd_gadget(go, io);
        }
        if (*types_cmd)
            return cmd_types_table(h_path, p, q, t, io);
        if (*cuts_cmd)
            return cmd_cuts(g_path, terminals, cut_k, io);
    }
    catch (const ParseError & e) {
        err << "retract: " << e.what() << '\n';
        return 2;
    }
    catch (const UsageError & e) {
        err << "retract: " << e.what() << '\n';
        return 2;
    }
    catch (const HypothesisFail & e) {
        out << "FAIL " << go.name << ' ' << e.what() << '\n';
        return 1;
    }
    catch (const GadgetError & e) {
        out << "FAIL " << go.name << ' ' << e.what() << '\n';
        return 1;
    }
    catch (const std::exception & e) {
        err << "retract: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace retract::cli
