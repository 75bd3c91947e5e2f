#pragma once

#include "lpaflow/graph.hpp"
#include "lpaflow/int_matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lpaflow {

// Which edge set of each vertex a partition splits: incoming edges for
// in-splits, outgoing edges for out-splits.
enum class Side { In, Out };

/// classes[v] lists the classes of v's edge set, each a list of edge ids.
/// Class i (1-based in text, 0-based here) becomes the new vertex v#i.
/// A vertex whose edge set is empty has no classes.
struct Partition {
    std::vector<std::vector<std::vector<EdgeId>>> classes;

    std::size_t class_count(VertexId v) const { return classes.at(v).size(); }
    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Throws PreconditionError naming the first defect found.
void validate_partition(const MultiGraph& g, const Partition& p, Side side);

/// One class per vertex with a nonempty edge set (splitting along it changes nothing).
Partition coarsest_partition(const MultiGraph& g, Side side);

/// Every edge in a class of its own.
Partition finest_partition(const MultiGraph& g, Side side);

/// Class index of each edge within its vertex's partition.
std::vector<std::size_t> class_of_edges(const MultiGraph& g, const Partition& p, Side side);

/// Images of the source graph's vertex classes: column v is the integer
/// combination of target vertices that vertex v is sent to.
struct VertexClassMap {
    IntMatrix images;  // target vertex count x source vertex count

    std::size_t source_count() const noexcept { return images.cols(); }
    std::size_t target_count() const noexcept { return images.rows(); }
};

/// A_old = R * S and A_new = S * R. Columns of R (rows of S) are the
/// partition classes in new-vertex order; a vertex with no classes
/// contributes one empty class for the vertex it keeps.
struct SplitFactorization {
    IntMatrix r;
    IntMatrix s;
};

struct SplitResult {
    MultiGraph graph;
    SplitFactorization factorization;
    VertexClassMap class_map;  // old graph -> split graph
};

// New vertices are v#1..v#m(v) grouped by original vertex order; a vertex
// with an empty edge set keeps its label. Edge e of the old graph becomes the
// copies e_1..e_k in order, with k the class count at its other end (at least 1).

/// Class map v -> v#1.
SplitResult in_split(const MultiGraph& g, const Partition& p);

/// Class map v -> sum of the v#i.
SplitResult out_split(const MultiGraph& g, const Partition& p);

/// The inverse of a split, given the vertex grouping.
///
/// Blocks must partition the vertices. They are normalised (each sorted,
/// blocks ordered by least member); the amalgamated graph has one vertex per
/// block in that order, and the i-th member of a block plays the role of its
/// i-th split vertex. The answer is checked by splitting it again along
/// `partition`, which must reproduce g with vertices in block order.
struct Amalgamation {
    MultiGraph graph;
    Partition partition;
    std::vector<std::vector<VertexId>> blocks;
};

/// Throws PreconditionError when g is not an in-split along these blocks.
Amalgamation in_amalgamate(const MultiGraph& g, std::span<const std::vector<VertexId>> blocks);
/// Throws PreconditionError when g is not an out-split along these blocks.
Amalgamation out_amalgamate(const MultiGraph& g, std::span<const std::vector<VertexId>> blocks);

/// Removes source v and its edges. Requires at least two vertices.
MultiGraph eliminate_source(const MultiGraph& g, VertexId v);
/// Class map of the elimination, w -> w, from the smaller graph into g.
VertexClassMap source_elimination_map(const MultiGraph& g, VertexId v);

/// Appends v* (label "<v>*"); edges leaving v leave v* instead, and a new
/// last edge v -> v* is added.
MultiGraph expand(const MultiGraph& g, VertexId v);
/// Class map of the expansion, w -> w.
VertexClassMap expansion_map(const MultiGraph& g, VertexId v);

/// Inverse of expand. Requires v != v_star, v's only out-edge to end at
/// v_star and to be v_star's only in-edge.
MultiGraph contract(const MultiGraph& g, VertexId v, VertexId v_star);

/// Finite delay data on vertices and edges.
struct DrinenVector {
    std::vector<std::uint64_t> vertex;
    std::vector<std::uint64_t> edge;

    static DrinenVector zero(const MultiGraph& g);
};

/// Source-vector check: every non-sink w has d(w) = max of d over its out-edges.
void validate_source_vector(const MultiGraph& g, const DrinenVector& d);
/// Range-vector check: every non-source w has d(w) = max of d over its in-edges.
void validate_range_vector(const MultiGraph& g, const DrinenVector& d);

/// Vertices v^0 (the old vertices, in order) followed by the delay vertices
/// v^1..v^d(v) grouped by v. Edge e runs s(e)^d(e) -> r(e)^0 and keeps its
/// id; the chain edges v^(i-1) -> v^i follow.
MultiGraph out_delay(const MultiGraph& g, const DrinenVector& d);

/// Mirror image: e runs s(e)_0 -> r(e)_d(e), chain edges v_i -> v_(i-1).
MultiGraph in_delay(const MultiGraph& g, const DrinenVector& d);

/// A partition is proper when no sink is split (in-split partitions only).
bool is_proper(const MultiGraph& g, const Partition& p);

/// The range-vector d(v) = m(v) - 1, d(e) = (class of e) - 1 attached to an in-split partition.
DrinenVector in_split_delay_vector(const MultiGraph& g, const Partition& p);

/// Shift graph from v to w: for each out-edge of w one parallel out-edge of v
/// is removed, and an edge v -> w is appended. Requires v != w, neither a
/// sink, and A(v, j) >= A(w, j) for all j.
MultiGraph shift(const MultiGraph& g, VertexId v, VertexId w);

/// Default attachment vertex for the sign-flipping gadgets: the last vertex
/// lying on a cycle. Throws PreconditionError if g is acyclic.
VertexId default_attachment(const MultiGraph& g);

/// Appends two vertices n1, n2 with edges c -> n1, n1 -> c, n1 -> n1,
/// n1 -> n2, n2 -> n1, n2 -> n2. Negates det(I - A^t), keeps the cokernel.
MultiGraph minus(const MultiGraph& g, std::optional<VertexId> attach = std::nullopt);

/// minus plus a third vertex n3 with the single edge n3 -> c. Also keeps the
/// unit class.
MultiGraph minus1(const MultiGraph& g, std::optional<VertexId> attach = std::nullopt);

/// Inclusion g -> minus(g).
VertexClassMap minus_map(const MultiGraph& g, std::optional<VertexId> attach = std::nullopt);

/// minus1(g) -> g: old vertices fixed, n1 -> 0, n2 -> -c, n3 -> c.
VertexClassMap minus1_map(const MultiGraph& g, std::optional<VertexId> attach = std::nullopt);

/// True iff m induces a well-defined isomorphism
/// coker(I - A_src^t) -> coker(I - A_tgt^t).
bool verify_vertex_class_map(const MultiGraph& src, const MultiGraph& tgt, const VertexClassMap& m);

/// True iff m carries the class of the all-ones vector to the all-ones class.
bool maps_unit_to_unit(const MultiGraph& src, const MultiGraph& tgt, const VertexClassMap& m);

}  // namespace lpaflow
