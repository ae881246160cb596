#pragma once

#include "retract/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace retract {

// Malformed input; what() carries "<source>:<line>: <message>".
class ParseError : public std::runtime_error
{
  public:
    ParseError(const std::string & source, std::size_t line, const std::string & message);

    auto line() const -> std::size_t { return line_; }

  private:
    std::size_t line_;
};

// Text format: first non-comment record "n <count>", then "e <u> <v>" records.
// Lines starting with '#' and blank lines are ignored.
auto parse_graph(std::istream & in, const std::string & source = "<input>") -> Graph;
auto parse_graph_string(const std::string & text, const std::string & source = "<string>") -> Graph;

// Emits "n <count>" followed by edges sorted by (min,max).
auto serialize_graph(const Graph & g) -> std::string;

} // namespace retract
