#include "lpaflow/flowsearch.hpp"

#include "lpaflow/errors.hpp"
#include "lpaflow/invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace lpaflow {

namespace {

using Key = std::vector<std::uint32_t>;

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : k) h = (h ^ x) * 1099511628211ULL;
        return h;
    }
};

Key key_of(const CanonicalForm& cf) {
    Key k;
    k.reserve(cf.matrix.size() + 1);
    k.push_back(static_cast<std::uint32_t>(cf.n));
    k.insert(k.end(), cf.matrix.begin(), cf.matrix.end());
    return k;
}

MultiGraph graph_of(const Key& k) {
    const std::size_t n = k[0];
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<unsigned long>(k[1 + i * n + j]);
    }
    return MultiGraph::from_matrix(a);
}

// Splits `counts` (a multiset given by multiplicities per type) into unordered
// collections of 2..max_classes nonempty sub-multisets. Classes are produced
// in non-increasing lexicographic order, so each collection appears once.
class MultisetPartitions {
public:
    MultisetPartitions(std::vector<std::uint32_t> counts, std::size_t max_classes, std::size_t cap)
        : counts_(std::move(counts)), max_classes_(max_classes), cap_(cap) {}

    // Returns false when the cap cut the enumeration short.
    bool run(const std::function<void(const std::vector<std::vector<std::uint32_t>>&)>& emit) {
        emit_ = &emit;
        std::vector<std::uint32_t> remaining = counts_;
        recurse(remaining, {});
        return !truncated_;
    }

private:
    static std::size_t first_nonzero(const std::vector<std::uint32_t>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] != 0) return i;
        }
        return v.size();
    }

    // `prev` is the previous class, empty for the first.
    void recurse(std::vector<std::uint32_t>& remaining, const std::vector<std::uint32_t>& prev) {
        if (truncated_) return;
        if (first_nonzero(remaining) == remaining.size()) {
            if (classes_.size() >= 2) {
                if (emitted_ == cap_) {
                    truncated_ = true;
                    return;
                }
                ++emitted_;
                (*emit_)(classes_);
            }
            return;
        }
        if (classes_.size() == max_classes_) return;
        // Candidate classes c <= remaining, nonzero, c <= prev (lex), visited in decreasing lex order.
        std::vector<std::uint32_t> c = remaining;
        if (!prev.empty() && std::lexicographical_compare(prev.begin(), prev.end(), c.begin(), c.end())) {
            // Start from the largest vector <= prev that fits in remaining.
            c = clamp_below(prev, remaining);
        }
        while (true) {
            if (first_nonzero(c) < c.size() && feasible(remaining, c)) {
                classes_.push_back(c);
                for (std::size_t i = 0; i < c.size(); ++i) remaining[i] -= c[i];
                recurse(remaining, std::vector<std::uint32_t>(c));
                for (std::size_t i = 0; i < c.size(); ++i) remaining[i] += c[i];
                classes_.pop_back();
                if (truncated_) return;
            }
            if (!decrement(c, remaining)) return;
        }
    }

    // The rest after taking c must split into classes no larger than c.
    static bool feasible(const std::vector<std::uint32_t>& remaining, const std::vector<std::uint32_t>& c) {
        const std::size_t lead = first_nonzero(c);
        for (std::size_t j = 0; j < lead && j < remaining.size(); ++j) {
            if (remaining[j] - c[j] != 0) return false;
        }
        return true;
    }

    // Largest vector (lex) bounded componentwise by `bound` and lexicographically by `limit`.
    static std::vector<std::uint32_t> clamp_below(const std::vector<std::uint32_t>& limit,
                                                  const std::vector<std::uint32_t>& bound) {
        std::vector<std::uint32_t> c(bound.size(), 0);
        for (std::size_t i = 0; i < bound.size(); ++i) {
            if (bound[i] < limit[i]) {
                c[i] = bound[i];
                for (std::size_t j = i + 1; j < bound.size(); ++j) c[j] = bound[j];
                return c;
            }
            c[i] = limit[i];
        }
        return c;  // equal to limit
    }

    // Next smaller vector in lex order with 0 <= c <= bound; false when exhausted.
    static bool decrement(std::vector<std::uint32_t>& c, const std::vector<std::uint32_t>& bound) {
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] > 0) {
                --c[i];
                for (std::size_t j = i + 1; j < c.size(); ++j) c[j] = bound[j];
                return true;
            }
        }
        return false;
    }

    std::vector<std::uint32_t> counts_;
    std::size_t max_classes_;
    std::size_t cap_;
    std::size_t emitted_ = 0;
    bool truncated_ = false;
    std::vector<std::vector<std::uint32_t>> classes_;
    const std::function<void(const std::vector<std::vector<std::uint32_t>>&)>* emit_ = nullptr;
};

// Split moves at vertex v: edges at v grouped by the vertex at their other
// end, parallel edges distributed in id order.
void split_moves(const MultiGraph& g, VertexId v, MoveKind kind, const SearchOptions& options,
                 std::vector<Move>& out, std::size_t* pruned) {
    const bool in = kind == MoveKind::InSplit;
    const auto edges = in ? g.in_edges(v) : g.out_edges(v);
    if (edges.size() < 2) return;
    const std::size_t room = options.max_vertices > g.vertex_count() ? options.max_vertices - g.vertex_count() : 0;
    if (room == 0) return;

    std::map<VertexId, std::vector<EdgeId>> by_other;
    for (EdgeId e : edges) by_other[in ? g.edge(e).source : g.edge(e).target].push_back(e);
    std::vector<std::vector<EdgeId>> groups;
    std::vector<std::uint32_t> counts;
    for (auto& [u, es] : by_other) {
        counts.push_back(static_cast<std::uint32_t>(es.size()));
        groups.push_back(std::move(es));
    }

    MultisetPartitions parts(counts, room + 1, options.max_partitions);
    const bool complete = parts.run([&](const std::vector<std::vector<std::uint32_t>>& classes) {
        Move m;
        m.kind = kind;
        std::vector<std::size_t> used(groups.size(), 0);
        auto& target = m.classes[v];
        for (const auto& c : classes) {
            std::vector<EdgeId> cls;
            for (std::size_t t = 0; t < c.size(); ++t) {
                for (std::uint32_t k = 0; k < c[t]; ++k) cls.push_back(groups[t][used[t]++]);
            }
            std::sort(cls.begin(), cls.end());
            target.push_back(std::move(cls));
        }
        out.push_back(std::move(m));
    });
    if (!complete && pruned != nullptr) ++*pruned;
}

// Merging one block of vertices that share their rows (in) or columns (out).
void amalgamation_moves(const MultiGraph& g, MoveKind kind, const SearchOptions& options, std::vector<Move>& out,
                        std::size_t* pruned) {
    const bool in = kind == MoveKind::InAmalgamate;
    const IntMatrix a = incidence_matrix(g);
    const std::size_t n = g.vertex_count();
    std::vector<bool> grouped(n, false);
    for (VertexId v = 0; v < n; ++v) {
        if (grouped[v] || (in ? g.in_degree(v) : g.out_degree(v)) == 0) continue;
        std::vector<VertexId> cls{v};
        for (VertexId w = v + 1; w < n; ++w) {
            if ((in ? g.in_degree(w) : g.out_degree(w)) == 0) continue;
            bool same = true;
            for (VertexId u = 0; u < n && same; ++u) same = in ? a(v, u) == a(w, u) : a(u, v) == a(u, w);
            if (same) cls.push_back(w);
        }
        for (VertexId w : cls) grouped[w] = true;
        if (cls.size() < 2) continue;
        std::size_t emitted = 0;
        const std::size_t limit = std::size_t{1} << cls.size();
        for (std::size_t mask = 1; mask < limit; ++mask) {
            if (std::popcount(mask) < 2) continue;
            if (emitted == options.max_partitions) {
                if (pruned != nullptr) ++*pruned;
                break;
            }
            std::vector<VertexId> block;
            for (std::size_t i = 0; i < cls.size(); ++i) {
                if (mask & (std::size_t{1} << i)) block.push_back(cls[i]);
            }
            Move m;
            m.kind = kind;
            m.blocks.push_back(std::move(block));
            out.push_back(std::move(m));
            ++emitted;
        }
    }
}

struct Node {
    Key key;
    std::size_t parent;  // index into the same side's node list; self for roots
    Move move;           // applied to graph_of(parent key); result isomorphic to this node
    std::size_t depth;
};

struct SearchSide {
    std::vector<Node> nodes;
    std::unordered_map<Key, std::size_t, KeyHash> index;
    std::vector<std::size_t> frontier;
    std::size_t depth = 0;

    explicit SearchSide(Key root) {
        nodes.push_back({root, 0, Move{}, 0});
        index.emplace(std::move(root), 0);
        frontier.push_back(0);
    }

    // Moves from the root to node i, each on its parent's canonical graph.
    std::vector<std::pair<Key, Move>> path_to(std::size_t i) const {
        std::vector<std::pair<Key, Move>> path;
        while (nodes[i].parent != i) {
            path.emplace_back(nodes[nodes[i].parent].key, nodes[i].move);
            i = nodes[i].parent;
        }
        std::reverse(path.begin(), path.end());
        return path;
    }
};

std::uint32_t max_entry(const MultiGraph& g) {
    std::vector<std::uint32_t> counts(g.vertex_count() * g.vertex_count(), 0);
    std::uint32_t best = 0;
    for (const Edge& e : g.edges()) best = std::max(best, ++counts[e.source * g.vertex_count() + e.target]);
    return best;
}

void check_hypotheses(const MultiGraph& g, const char* which) {
    const GraphReport r = classify_graph(g);
    if (!r.essential) throw PreconditionError(std::string(which) + " graph is not essential");
    if (!r.irreducible) throw PreconditionError(std::string(which) + " graph is not irreducible");
    if (r.trivial) throw PreconditionError(std::string(which) + " graph is a single cycle");
}

}  // namespace

Isomorphism inverse(const Isomorphism& iso) {
    Isomorphism inv{std::vector<VertexId>(iso.vertex.size()), std::vector<EdgeId>(iso.edge.size())};
    for (std::size_t i = 0; i < iso.vertex.size(); ++i) inv.vertex[iso.vertex[i]] = i;
    for (std::size_t i = 0; i < iso.edge.size(); ++i) inv.edge[iso.edge[i]] = i;
    return inv;
}

Isomorphism canonical_isomorphism(const MultiGraph& g, const CanonicalForm& cf) {
    const std::size_t n = g.vertex_count();
    Isomorphism iso{std::vector<VertexId>(n), std::vector<EdgeId>(g.edge_count())};
    for (std::size_t k = 0; k < n; ++k) iso.vertex[cf.order[k]] = k;
    std::vector<std::size_t> next(n * n, 0);  // first unused edge id per (row, col) of the canonical matrix
    std::size_t offset = 0;
    for (std::size_t i = 0; i < n * n; ++i) {
        next[i] = offset;
        offset += cf.matrix[i];
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        iso.edge[e] = next[iso.vertex[ed.source] * n + iso.vertex[ed.target]]++;
    }
    return iso;
}

MultiGraph canonical_graph(const CanonicalForm& cf) { return graph_of(key_of(cf)); }

Move translate_move(const Move& m, const Isomorphism& iso) {
    Move t;
    t.kind = m.kind;
    for (VertexId v : m.vertices) t.vertices.push_back(iso.vertex.at(v));
    for (const auto& [v, classes] : m.classes) {
        auto& target = t.classes[iso.vertex.at(v)];
        for (const auto& cls : classes) {
            std::vector<EdgeId> mapped;
            for (EdgeId e : cls) mapped.push_back(iso.edge.at(e));
            std::sort(mapped.begin(), mapped.end());
            target.push_back(std::move(mapped));
        }
    }
    for (const auto& block : m.blocks) {
        std::vector<VertexId> mapped;
        for (VertexId v : block) mapped.push_back(iso.vertex.at(v));
        std::sort(mapped.begin(), mapped.end());
        t.blocks.push_back(std::move(mapped));
    }
    for (const auto& [v, d] : m.vertex_delays) t.vertex_delays[iso.vertex.at(v)] = d;
    for (const auto& [e, d] : m.edge_delays) t.edge_delays[iso.edge.at(e)] = d;
    return t;
}

Move inverse_move(const MultiGraph& before, const Move& m, const MultiGraph& after) {
    Move inv;
    switch (m.kind) {
        case MoveKind::Expand:
            inv.kind = MoveKind::Contract;
            inv.vertices = {m.vertices.at(0), before.vertex_count()};
            return inv;
        case MoveKind::Contract: {
            const VertexId v = m.vertices.at(0), star = m.vertices.at(1);
            inv.kind = MoveKind::Expand;
            inv.vertices = {v - (v > star)};
            return inv;
        }
        case MoveKind::InSplit:
        case MoveKind::OutSplit: {
            inv.kind = m.kind == MoveKind::InSplit ? MoveKind::InAmalgamate : MoveKind::OutAmalgamate;
            const Partition p = partition_for(before, m);
            VertexId next = 0;
            for (VertexId v = 0; v < before.vertex_count(); ++v) {
                const std::size_t k = std::max<std::size_t>(1, p.class_count(v));
                if (k >= 2) {
                    std::vector<VertexId> block;
                    for (std::size_t i = 0; i < k; ++i) block.push_back(next + i);
                    inv.blocks.push_back(std::move(block));
                }
                next += k;
            }
            return inv;
        }
        case MoveKind::InAmalgamate:
        case MoveKind::OutAmalgamate: {
            auto blocks = m.blocks;
            std::vector<bool> listed(before.vertex_count(), false);
            for (const auto& b : blocks) {
                for (VertexId v : b) listed.at(v) = true;
            }
            for (VertexId v = 0; v < before.vertex_count(); ++v) {
                if (!listed[v]) blocks.push_back({v});
            }
            const Amalgamation a = m.kind == MoveKind::InAmalgamate ? in_amalgamate(before, blocks)
                                                                    : out_amalgamate(before, blocks);
            inv.kind = m.kind == MoveKind::InAmalgamate ? MoveKind::InSplit : MoveKind::OutSplit;
            for (VertexId v = 0; v < a.graph.vertex_count(); ++v) {
                if (a.partition.class_count(v) >= 2) inv.classes[v] = a.partition.classes[v];
            }
            if (!same_incidence(a.graph, after)) throw std::logic_error("inverse_move: amalgamation mismatch");
            return inv;
        }
        default:
            throw PreconditionError(std::string("no inverse move for ") + to_string(m.kind));
    }
}

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::InvariantMismatch: return "invariant-mismatch";
        case SearchStatus::BoundsExhausted: return "bounds-exhausted";
    }
    return "?";
}

std::vector<Move> standard_moves(const MultiGraph& g, const SearchOptions& options, std::size_t* pruned) {
    std::vector<Move> moves;
    const std::size_t n = g.vertex_count();
    if (n >= 2) {
        for (VertexId v : sources(g)) moves.push_back({MoveKind::EliminateSource, {v}, {}, {}, {}, {}});
    }
    if (n < options.max_vertices) {
        for (VertexId v = 0; v < n; ++v) moves.push_back({MoveKind::Expand, {v}, {}, {}, {}, {}});
    }
    for (VertexId v = 0; v < n; ++v) {
        const auto out = g.out_edges(v);
        if (out.size() != 1) continue;
        const VertexId w = g.edge(out[0]).target;
        if (w != v && g.in_degree(w) == 1) moves.push_back({MoveKind::Contract, {v, w}, {}, {}, {}, {}});
    }
    for (VertexId v = 0; v < n; ++v) split_moves(g, v, MoveKind::InSplit, options, moves, pruned);
    for (VertexId v = 0; v < n; ++v) split_moves(g, v, MoveKind::OutSplit, options, moves, pruned);
    amalgamation_moves(g, MoveKind::InAmalgamate, options, moves, pruned);
    amalgamation_moves(g, MoveKind::OutAmalgamate, options, moves, pruned);
    return moves;
}

SearchResult find_sequence(const MultiGraph& src, const MultiGraph& dst, const SearchOptions& options) {
    if (options.max_vertices > kMaxIsomorphismVertices) {
        throw PreconditionError("max_vertices is capped at " + std::to_string(kMaxIsomorphismVertices));
    }
    check_hypotheses(src, "source");
    check_hypotheses(dst, "target");

    SearchResult result;
    if (!equiv_det_pair(franks_triple(src), franks_triple(dst))) {
        result.status = SearchStatus::InvariantMismatch;
        return result;
    }
    if (src.vertex_count() > options.max_vertices || dst.vertex_count() > options.max_vertices) {
        result.stats.pruned_vertex_cap = 1;
        return result;
    }

    SearchSide fwd(key_of(canonical_form(src)));
    SearchSide bwd(key_of(canonical_form(dst)));

    // Meeting point: node index on each side.
    std::optional<std::pair<std::size_t, std::size_t>> meet;
    if (auto it = bwd.index.find(fwd.nodes[0].key); it != bwd.index.end()) meet = {{0, it->second}};

    while (!meet && fwd.depth + bwd.depth < options.max_depth && !result.stats.node_cap_hit) {
        const bool forward = fwd.frontier.size() <= bwd.frontier.size();
        SearchSide& side = forward ? fwd : bwd;
        const SearchSide& other = forward ? bwd : fwd;
        if (side.frontier.empty()) break;
        std::vector<std::size_t> next;
        for (std::size_t idx : side.frontier) {
            const Key key = side.nodes[idx].key;
            const MultiGraph g = graph_of(key);
            ++result.stats.expanded;
            for (Move& m : standard_moves(g, options, &result.stats.pruned_partition_cap)) {
                const MultiGraph h = apply_move(g, m);
                if (h.vertex_count() > options.max_vertices) {
                    ++result.stats.pruned_vertex_cap;
                    continue;
                }
                if (max_entry(h) > options.max_entry) {
                    ++result.stats.pruned_entry_cap;
                    continue;
                }
                Key hk = key_of(canonical_form(h));
                if (side.index.count(hk)) continue;
                if (fwd.nodes.size() + bwd.nodes.size() >= options.max_nodes) {
                    result.stats.node_cap_hit = true;
                    break;
                }
                const std::size_t id = side.nodes.size();
                side.nodes.push_back({hk, idx, std::move(m), side.depth + 1});
                side.index.emplace(hk, id);
                next.push_back(id);
                if (auto it = other.index.find(hk); it != other.index.end()) {
                    meet = forward ? std::make_pair(id, it->second) : std::make_pair(it->second, id);
                    break;
                }
            }
            if (meet || result.stats.node_cap_hit) break;
        }
        side.frontier = std::move(next);
        ++side.depth;
    }
    result.stats.forward_nodes = fwd.nodes.size();
    result.stats.backward_nodes = bwd.nodes.size();
    if (!meet) return result;

    // Moves on canonical graphs from the source class to the target class.
    std::vector<std::pair<Key, Move>> chain = fwd.path_to(meet->first);
    std::size_t i = meet->second;
    while (bwd.nodes[i].parent != i) {
        const Node& node = bwd.nodes[i];
        const MultiGraph before = graph_of(bwd.nodes[node.parent].key);
        const MultiGraph after = apply_move(before, node.move);
        const Move back = inverse_move(before, node.move, after);
        // `after` is isomorphic to the canonical graph of node.key; move the inverse there.
        const CanonicalForm cf = canonical_form(after);
        chain.emplace_back(node.key, translate_move(back, canonical_isomorphism(after, cf)));
        i = node.parent;
    }

    // Replay on the actual graphs, carrying each canonical move over.
    MultiGraph current = src;
    for (const auto& [key, m] : chain) {
        const CanonicalForm cf = canonical_form(current);
        if (key_of(cf) != key) throw std::logic_error("find_sequence: replay left the search path");
        const Move actual = translate_move(m, inverse(canonical_isomorphism(current, cf)));
        current = apply_move(current, actual);
        result.sequence.steps.push_back({actual, current});
    }
    if (!isomorphic(current, dst)) throw std::logic_error("find_sequence: replay does not reach the target");
    result.status = SearchStatus::Found;
    return result;
}

}  // namespace lpaflow
