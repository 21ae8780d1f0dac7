// Text interchange format shared by every CLI command:
//   # comment
//   n <N>
//   e <u> <v>        with 0 <= u < v < N
//   A <v> <count>    optional per-vertex ADM caps (used by `check`)
// Writers emit edges sorted lexicographically.
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "groom/graph.hpp"

namespace groom {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct GraphInput {
    Graph graph;
    std::optional<std::vector<int>> caps;  // present when the file carried "A" lines
};

GraphInput parse_graph_input(std::istream& in);
Graph parse_graph(const std::string& text);
Graph parse_graph(std::istream& in);

std::string write_graph(const Graph& g);
void write_graph(std::ostream& out, const Graph& g);

// One-line rendering, e.g. "n4:0-1,0-2,1-3" -- used inside certificates.
std::string compact_graph(const Graph& g);
Graph parse_compact_graph(const std::string& text);

}  // namespace groom
