#include "groom/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace groom {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    return value;
}

}  // namespace

GraphInput parse_graph_input(std::istream& in) {
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::vector<int> caps;
    bool has_caps = false;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "n") {
            if (toks.size() != 2) throw ParseError(lineno, "header must be 'n <N>'");
            if (n != -1) throw ParseError(lineno, "duplicate 'n' header");
            n = parse_int(toks[1], lineno);
            if (n < 1) throw ParseError(lineno, "vertex count must be at least 1");
            caps.assign(static_cast<size_t>(n), 0);
        } else if (toks[0] == "e") {
            if (n == -1) throw ParseError(lineno, "'e' line before 'n' header");
            if (toks.size() != 3) throw ParseError(lineno, "edge line must be 'e <u> <v>'");
            int u = parse_int(toks[1], lineno);
            int v = parse_int(toks[2], lineno);
            if (u == v) throw ParseError(lineno, "self-loop (" + std::to_string(u) + ")");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError(lineno, "vertex index out of range [0," + std::to_string(n - 1) + "]");
            Edge e(u, v);
            for (const Edge& f : edges)
                if (f == e) throw ParseError(lineno, "duplicate edge (" + std::to_string(e.u) + "," +
                                                         std::to_string(e.v) + ")");
            edges.push_back(e);
        } else if (toks[0] == "A") {
            if (n == -1) throw ParseError(lineno, "'A' line before 'n' header");
            if (toks.size() != 3) throw ParseError(lineno, "cap line must be 'A <v> <count>'");
            int v = parse_int(toks[1], lineno);
            int c = parse_int(toks[2], lineno);
            if (v < 0 || v >= n)
                throw ParseError(lineno, "vertex index out of range [0," + std::to_string(n - 1) + "]");
            if (c < 0) throw ParseError(lineno, "ADM count must be nonnegative");
            caps[static_cast<size_t>(v)] = c;
            has_caps = true;
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (n == -1) throw ParseError(lineno, "missing 'n <N>' header");
    GraphInput out{Graph(n, std::move(edges)), std::nullopt};
    if (has_caps) out.caps = std::move(caps);
    return out;
}

Graph parse_graph(std::istream& in) { return parse_graph_input(in).graph; }

Graph parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
}

std::string write_graph(const Graph& g) {
    std::ostringstream ss;
    write_graph(ss, g);
    return ss.str();
}

std::string compact_graph(const Graph& g) {
    std::ostringstream ss;
    ss << "n" << g.vertex_count() << ":";
    bool first = true;
    for (const Edge& e : g.edges()) {
        if (!first) ss << ",";
        first = false;
        ss << e.u << "-" << e.v;
    }
    return ss.str();
}

Graph parse_compact_graph(const std::string& text) {
    auto bad = [&]() { return ParseError(1, "bad compact graph '" + text + "'"); };
    if (text.empty() || text[0] != 'n') throw bad();
    size_t colon = text.find(':');
    if (colon == std::string::npos) throw bad();
    int n = 0;
    try {
        n = std::stoi(text.substr(1, colon - 1));
    } catch (const std::exception&) {
        throw bad();
    }
    std::vector<Edge> edges;
    size_t pos = colon + 1;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string pair = text.substr(pos, comma - pos);
        size_t dash = pair.find('-');
        if (dash == std::string::npos) throw bad();
        try {
            edges.emplace_back(std::stoi(pair.substr(0, dash)), std::stoi(pair.substr(dash + 1)));
        } catch (const std::exception&) {
            throw bad();
        }
        pos = comma + 1;
    }
    return Graph(n, std::move(edges));
}

}  // namespace groom
