#include "lpaflow/graph_io.hpp"

#include "lpaflow/errors.hpp"
#include "text.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace lpaflow {

namespace {

using text::Line;

std::size_t parse_count(const Line& line, const text::Token& tok, const char* what) {
    return text::parse_unsigned<std::size_t>(line.number, tok, what);
}

constexpr std::size_t kMaxMultiplicity = 1000000;
constexpr std::size_t kMaxVertices = 100000;

}  // namespace

MultiGraph parse_graph(std::string_view input) {
    const auto lines = text::lines(input);
    if (lines.empty()) {
        throw ParseError(1, 1, "empty graph description");
    }
    const Line& header = lines.front();
    const std::string_view kind = header.tokens[0].text;
    if (kind != "matrix" && kind != "edges") {
        throw ParseError(header.number, header.tokens[0].column,
                         "expected 'matrix' or 'edges', found '" + std::string(kind) + "'");
    }
    if (header.tokens.size() != 2) {
        const std::size_t col = header.tokens.size() < 2 ? header.tokens[0].column + kind.size() : header.tokens[2].column;
        throw ParseError(header.number, col, "header must be '" + std::string(kind) + " n'");
    }
    const std::size_t n = parse_count(header, header.tokens[1], "the vertex count");
    if (n == 0) {
        throw ParseError(header.number, header.tokens[1].column, "a graph needs at least one vertex");
    }
    if (n > kMaxVertices) {
        throw ParseError(header.number, header.tokens[1].column, "vertex count too large");
    }

    IntMatrix a(n, n);
    if (kind == "matrix") {
        if (lines.size() - 1 < n) {
            const Line& last = lines.back();
            throw ParseError(last.number + 1, 1,
                             "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - 1));
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Line& row = lines[i + 1];
            if (row.tokens.size() != n) {
                const std::size_t col = row.tokens.size() > n ? row.tokens[n].column
                                                              : row.tokens.back().column + row.tokens.back().text.size();
                throw ParseError(row.number, col,
                                 "expected " + std::to_string(n) + " entries, found " + std::to_string(row.tokens.size()));
            }
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t k = parse_count(row, row.tokens[j], "a matrix entry");
                if (k > kMaxMultiplicity) throw ParseError(row.number, row.tokens[j].column, "edge multiplicity too large");
                a(i, j) = static_cast<unsigned long>(k);
            }
        }
        if (lines.size() > n + 1) {
            const Line& extra = lines[n + 1];
            throw ParseError(extra.number, extra.tokens[0].column, "unexpected content after the matrix rows");
        }
    } else {
        for (std::size_t l = 1; l < lines.size(); ++l) {
            const Line& line = lines[l];
            if (line.tokens.size() != 3) {
                const std::size_t col = line.tokens.size() > 3 ? line.tokens[3].column : line.tokens[0].column;
                throw ParseError(line.number, col, "edge lines have the form 'i j k'");
            }
            const std::size_t i = parse_count(line, line.tokens[0], "a source vertex");
            const std::size_t j = parse_count(line, line.tokens[1], "a target vertex");
            const std::size_t k = parse_count(line, line.tokens[2], "an edge multiplicity");
            if (i >= n) throw ParseError(line.number, line.tokens[0].column, "source vertex out of range");
            if (j >= n) throw ParseError(line.number, line.tokens[1].column, "target vertex out of range");
            a(i, j) += static_cast<unsigned long>(k);
            if (a(i, j) > static_cast<unsigned long>(kMaxMultiplicity)) {
                throw ParseError(line.number, line.tokens[2].column, "edge multiplicity too large");
            }
        }
    }
    return MultiGraph::from_matrix(a);
}

MultiGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open graph file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string format_matrix(const MultiGraph& g) {
    std::ostringstream out;
    out << "matrix " << g.vertex_count() << '\n' << incidence_matrix(g).to_string();
    return out.str();
}

std::string format_edges(const MultiGraph& g) {
    const IntMatrix a = incidence_matrix(g);
    std::ostringstream out;
    out << "edges " << g.vertex_count() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) != 0) out << i << ' ' << j << ' ' << a(i, j) << '\n';
        }
    }
    return out.str();
}

MultiGraph normalize_edges(const MultiGraph& g) {
    return MultiGraph::from_matrix(incidence_matrix(g), {g.labels().begin(), g.labels().end()});
}

}  // namespace lpaflow
