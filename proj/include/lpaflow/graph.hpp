#pragma once

#include "lpaflow/int_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpaflow {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
    VertexId source;
    VertexId target;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite directed multigraph with ordered vertices 0..n-1.
///
/// Loops and parallel edges are allowed. An edge's id is its position in the
/// edge list. Vertex order is part of the graph's identity since incidence
/// matrices depend on it; use `isomorphic` for the order-free comparison.
/// Graphs are never empty.
class MultiGraph {
public:
    // Labels default to "v0", "v1", ...
    MultiGraph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

    // Edges are emitted in row-major order of the matrix.
    static MultiGraph from_matrix(const IntMatrix& a, std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const std::string& label(VertexId v) const { return labels_.at(v); }
    std::span<const std::string> labels() const noexcept { return labels_; }

    // Edge ids in increasing order.
    std::vector<EdgeId> out_edges(VertexId v) const;
    std::vector<EdgeId> in_edges(VertexId v) const;
    std::size_t out_degree(VertexId v) const;
    std::size_t in_degree(VertexId v) const;

    // Resolves a vertex reference: an exact label match, otherwise a decimal index.
    std::optional<VertexId> find_vertex(std::string_view ref) const;

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

private:
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

std::string default_label(VertexId v);

/// Entry (i, j) counts the edges from vertex i to vertex j.
IntMatrix incidence_matrix(const MultiGraph& g);

/// Same vertices and edge ids, every edge reversed.
MultiGraph transpose(const MultiGraph& g);

struct GraphReport {
    bool has_sources = false;
    bool has_sinks = false;
    bool irreducible = false;
    bool essential = false;
    bool trivial = false;
    bool every_cycle_has_exit = false;
    // Every vertex reaches every cycle and every sink.
    bool every_vertex_reaches_cycle_or_sink = false;
    bool has_cycle = false;
    bool simple_lpa = false;
    bool purely_infinite_simple = false;

    friend bool operator==(const GraphReport&, const GraphReport&) = default;
};

GraphReport classify_graph(const MultiGraph& g);

std::vector<VertexId> sources(const MultiGraph& g);
std::vector<VertexId> sinks(const MultiGraph& g);

/// Strongly connected component index of every vertex; components are
/// numbered in order of their smallest vertex.
std::vector<std::size_t> strongly_connected_components(const MultiGraph& g);

/// on_cycle[v] is true iff some cycle passes through v.
std::vector<bool> vertices_on_cycles(const MultiGraph& g);

/// A cycle all of whose vertices have out-degree one (a cycle without an
/// exit), as its vertex sequence; the lexicographically least one when there
/// are several.
std::optional<std::vector<VertexId>> exitless_cycle(const MultiGraph& g);

inline constexpr std::size_t kMaxIsomorphismVertices = 8;

/// Minimum relabelling of the incidence matrix over all vertex orders.
///
/// Matrices are compared through the sequence of their leading k x k blocks:
/// entry (0,0), then for each new position k the pairs (i,k), (k,i) for i < k
/// followed by (k,k). `order[k]` is the original vertex placed at position k.
struct CanonicalForm {
    std::size_t n = 0;
    std::vector<std::uint32_t> matrix;  // row-major in canonical order
    std::vector<VertexId> order;
};

/// Brute force with prefix pruning; throws LimitError above kMaxIsomorphismVertices.
CanonicalForm canonical_form(const MultiGraph& g);

/// Vertex-order-free equality; throws LimitError above kMaxIsomorphismVertices.
bool isomorphic(const MultiGraph& a, const MultiGraph& b);

/// Same vertex count and identical incidence matrices (edge ids and labels ignored).
bool same_incidence(const MultiGraph& a, const MultiGraph& b);

/// Vertex at position k of the result is `order[k]` of g; labels follow their vertices.
MultiGraph reorder_vertices(const MultiGraph& g, std::span<const VertexId> order);

}  // namespace lpaflow
