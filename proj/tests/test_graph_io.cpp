#include "doctest.h"

#include "lpaflow/errors.hpp"
#include "lpaflow/graph_io.hpp"
#include "lpaflow/random.hpp"
#include "support/seed.hpp"

#include <cstdio>
#include <fstream>

using namespace lpaflow;

namespace {

// Line and column of the ParseError thrown by parse_graph, or {0, 0}.
std::pair<std::size_t, std::size_t> error_at(std::string_view input) {
    try {
        parse_graph(input);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    return {0, 0};
}

}  // namespace

TEST_CASE("matrix format") {
    const MultiGraph g = parse_graph("matrix 2\n1 1\n3 2\n");
    CHECK(incidence_matrix(g) == IntMatrix{{1, 1}, {3, 2}});
    CHECK(g.edge_count() == 7);
    CHECK(g.label(1) == "v1");
}

TEST_CASE("edge format accumulates repeated pairs") {
    const MultiGraph g = parse_graph("edges 3\n0 1 2\n1 2 1\n2 0 1\n0 1 1\n");
    CHECK(incidence_matrix(g) == IntMatrix{{0, 3, 0}, {0, 0, 1}, {1, 0, 0}});
    // Edge ids follow row-major order whatever the input order.
    CHECK(g.edge(3) == Edge{1, 2});
    CHECK(parse_graph("edges 2\n") == MultiGraph(2, {}));
}

TEST_CASE("comments, blank lines and tabs") {
    const MultiGraph g = parse_graph("# the rose\n\nmatrix 1  # one vertex\n\t4\n\n# done\n");
    CHECK(incidence_matrix(g) == IntMatrix{{4}});
    CHECK(incidence_matrix(parse_graph("matrix 2\r\n0 1\r\n1 0\r\n")) == IntMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("parse errors carry line and column") {
    CHECK(error_at("") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(error_at("# nothing\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(error_at("graph 2\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(error_at("matrix\n") == std::pair<std::size_t, std::size_t>{1, 7});
    CHECK(error_at("matrix 0\n") == std::pair<std::size_t, std::size_t>{1, 8});
    CHECK(error_at("matrix x\n") == std::pair<std::size_t, std::size_t>{1, 8});
    CHECK(error_at("matrix 2 3\n") == std::pair<std::size_t, std::size_t>{1, 10});
    CHECK(error_at("matrix 2\n1 1\n1 -1\n") == std::pair<std::size_t, std::size_t>{3, 3});
    CHECK(error_at("matrix 2\n1 1\n1 1 1\n") == std::pair<std::size_t, std::size_t>{3, 5});
    CHECK(error_at("matrix 2\n1 1\n1\n") == std::pair<std::size_t, std::size_t>{3, 2});
    CHECK(error_at("matrix 2\n1 1\n") == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(error_at("matrix 1\n1\n2\n") == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(error_at("matrix 1\n2000000\n") == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(error_at("edges 2\n0 2 1\n") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(error_at("edges 2\n\n  5 0 1\n") == std::pair<std::size_t, std::size_t>{3, 3});
    CHECK(error_at("edges 2\n0 1\n") == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(error_at("edges 2\n0 1 1 1\n") == std::pair<std::size_t, std::size_t>{2, 7});

    try {
        parse_graph("matrix 2\n1 1\n1 z\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "line 3, column 3: expected a non-negative integer for a matrix entry, found 'z'");
    }
}

TEST_CASE("formatting round trips") {
    auto rng = testsupport::rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const MultiGraph g = random_graph(rng, 1 + trial % 6, 3);
        REQUIRE(parse_graph(format_matrix(g)) == g);
        REQUIRE(parse_graph(format_edges(g)) == g);
    }
    CHECK(format_matrix(MultiGraph::from_matrix(IntMatrix{{1, 1}, {3, 2}})) == "matrix 2\n1 1\n3 2\n");
    CHECK(format_edges(MultiGraph::from_matrix(IntMatrix{{0, 2}, {1, 0}})) == "edges 2\n0 1 2\n1 0 1\n");
}

TEST_CASE("normalize_edges keeps labels and sorts edges") {
    const MultiGraph g(2, {{1, 0}, {0, 1}, {0, 0}}, {"a", "b"});
    const MultiGraph h = normalize_edges(g);
    CHECK(h.labels()[1] == "b");
    CHECK(h.edge(0) == Edge{0, 0});
    CHECK(h.edge(1) == Edge{0, 1});
    CHECK(h.edge(2) == Edge{1, 0});
}

TEST_CASE("reading files") {
    const std::string path = "test_graph_io_tmp.txt";
    {
        std::ofstream out(path);
        out << "matrix 1\n4\n";
    }
    CHECK(incidence_matrix(read_graph_file(path)) == IntMatrix{{4}});
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_graph_file(path), Error);
}
