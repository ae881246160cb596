#include "retract/graph_io.hpp"
#include "text_util.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

namespace retract {

ParseError::ParseError(const std::string & source, std::size_t line, const std::string & message) :
    std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
    line_(line)
{
}

namespace detail
{
    auto split_ws(const std::string & line) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok)
            out.push_back(tok);
        return out;
    }

    auto parse_uint(const std::string & tok, const std::string & source, std::size_t line) -> std::uint64_t
    {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError(source, line, "expected non-negative integer, got '" + tok + "'");
        return v;
    }
}

auto parse_graph(std::istream & in, const std::string & source) -> Graph
{
    std::string line;
    std::size_t lineno = 0;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#')
            continue;
        if (! g) {
            if (toks[0] != "n" || toks.size() != 2)
                throw ParseError(source, lineno, "expected 'n <vertex_count>' as first record");
            auto n = detail::parse_uint(toks[1], source, lineno);
            if (n > 1'000'000)
                throw ParseError(source, lineno, "vertex count too large");
            g.emplace(static_cast<std::size_t>(n));
            continue;
        }
        if (toks[0] != "e" || toks.size() != 3)
            throw ParseError(source, lineno, "expected 'e <u> <v>'");
        auto u = detail::parse_uint(toks[1], source, lineno);
        auto v = detail::parse_uint(toks[2], source, lineno);
        if (u >= g->vertex_count() || v >= g->vertex_count())
            throw ParseError(source, lineno, "edge endpoint out of range");
        g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (! g)
        throw ParseError(source, lineno, "missing 'n <vertex_count>' record");
    return std::move(*g);
}

auto parse_graph_string(const std::string & text, const std::string & source) -> Graph
{
    std::istringstream ss(text);
    return parse_graph(ss, source);
}

auto serialize_graph(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << "n " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

} // namespace retract
