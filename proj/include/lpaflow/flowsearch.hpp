#pragma once

#include "lpaflow/graph.hpp"
#include "lpaflow/script.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lpaflow {

/// A vertex and edge bijection from one graph onto another.
struct Isomorphism {
    std::vector<VertexId> vertex;
    std::vector<EdgeId> edge;
};

Isomorphism inverse(const Isomorphism& iso);

/// The isomorphism from g onto the graph built from its canonical matrix
/// (edges in row-major order). Parallel edges are matched in id order.
Isomorphism canonical_isomorphism(const MultiGraph& g, const CanonicalForm& cf);

/// The graph built from a canonical form.
MultiGraph canonical_graph(const CanonicalForm& cf);

/// The same move expressed on the image graph of `iso`.
Move translate_move(const Move& m, const Isomorphism& iso);

/// A move on `after` = apply_move(before, m) whose result is isomorphic to
/// `before`. Defined for expansions, contractions, splits and amalgamations.
Move inverse_move(const MultiGraph& before, const Move& m, const MultiGraph& after);

struct SearchOptions {
    std::size_t max_depth = 6;
    std::size_t max_vertices = 6;  // at most kMaxIsomorphismVertices
    std::uint32_t max_entry = 9;
    std::size_t max_partitions = 512;  // split partitions / amalgamation blocks per vertex class
    std::size_t max_nodes = 400000;
};

enum class SearchStatus { Found, InvariantMismatch, BoundsExhausted };

const char* to_string(SearchStatus s);

struct SearchStats {
    std::size_t forward_nodes = 0;
    std::size_t backward_nodes = 0;
    std::size_t expanded = 0;
    std::size_t pruned_vertex_cap = 0;
    std::size_t pruned_entry_cap = 0;
    std::size_t pruned_partition_cap = 0;
    bool node_cap_hit = false;
};

struct SearchResult {
    SearchStatus status = SearchStatus::BoundsExhausted;
    MoveSequence sequence;  // replays from src; the last graph is isomorphic to dst
    SearchStats stats;
};

/// Bidirectional breadth-first search for a sequence of standard moves
/// turning src into a graph isomorphic to dst.
///
/// Nodes are isomorphism classes. Each step expands, contracts, splits a
/// single vertex or merges a single block of vertices, which generates the
/// same equivalence as the full moves. Both graphs must be essential,
/// irreducible and nontrivial (PreconditionError otherwise). Graphs whose
/// Bowen-Franks group or determinant differ give InvariantMismatch without
/// searching. The result is a deterministic function of the inputs and options.
SearchResult find_sequence(const MultiGraph& src, const MultiGraph& dst, const SearchOptions& options = {});

/// All single-step standard moves the search would try from g, in search order.
/// `pruned` (optional) counts enumerations cut off by max_partitions.
std::vector<Move> standard_moves(const MultiGraph& g, const SearchOptions& options, std::size_t* pruned = nullptr);

}  // namespace lpaflow
