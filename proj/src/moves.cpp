#include "lpaflow/moves.hpp"

#include "lpaflow/errors.hpp"
#include "lpaflow/exactla.hpp"
#include "lpaflow/invariants.hpp"

#include <algorithm>
#include <string>

namespace lpaflow {

namespace {

void check_vertex(const MultiGraph& g, VertexId v, const char* what) {
    if (v >= g.vertex_count()) {
        throw PreconditionError(std::string(what) + ": vertex " + std::to_string(v) + " out of range (graph has " +
                                std::to_string(g.vertex_count()) + " vertices)");
    }
}

std::vector<EdgeId> edge_set(const MultiGraph& g, VertexId v, Side side) {
    return side == Side::In ? g.in_edges(v) : g.out_edges(v);
}

const char* side_name(Side side) { return side == Side::In ? "in-split" : "out-split"; }

std::string split_label(const std::string& base, std::size_t i) { return base + "#" + std::to_string(i + 1); }

// A label not yet used in `labels`, starting from `base`.
std::string fresh_label(const std::vector<std::string>& labels, std::string base) {
    while (std::find(labels.begin(), labels.end(), base) != labels.end()) base += "'";
    return base;
}

// Position of the first new vertex for each old vertex after a split.
struct SplitLayout {
    std::vector<std::size_t> first;
    std::vector<std::size_t> count;  // class count, at least 1
    std::size_t total = 0;

    SplitLayout(const MultiGraph& g, const Partition& p) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            first.push_back(total);
            count.push_back(std::max<std::size_t>(1, p.class_count(v)));
            total += count.back();
        }
    }
};

std::vector<std::string> split_labels(const MultiGraph& g, const Partition& p) {
    std::vector<std::string> labels;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (p.class_count(v) == 0) {
            labels.push_back(g.label(v));
        } else {
            for (std::size_t i = 0; i < p.class_count(v); ++i) labels.push_back(split_label(g.label(v), i));
        }
    }
    return labels;
}

// Shared by both splits; `side` says which end of an edge the partition lives at.
SplitResult split(const MultiGraph& g, const Partition& p, Side side) {
    validate_partition(g, p, side);
    const SplitLayout layout(g, p);
    const auto cls = class_of_edges(g, p, side);

    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& old = g.edge(e);
        if (side == Side::In) {
            const VertexId target = layout.first[old.target] + cls[e];
            for (std::size_t j = 0; j < layout.count[old.source]; ++j) {
                edges.push_back({layout.first[old.source] + j, target});
            }
        } else {
            const VertexId source = layout.first[old.source] + cls[e];
            for (std::size_t j = 0; j < layout.count[old.target]; ++j) {
                edges.push_back({source, layout.first[old.target] + j});
            }
        }
    }

    const std::size_t n = g.vertex_count();
    const std::size_t classes = layout.total;
    SplitFactorization f{IntMatrix(n, classes), IntMatrix(classes, n)};
    VertexClassMap map{IntMatrix(classes, n)};
    for (VertexId v = 0; v < n; ++v) {
        for (std::size_t j = 0; j < layout.count[v]; ++j) {
            const std::size_t c = layout.first[v] + j;
            if (side == Side::In) {
                f.s(c, v) = 1;
            } else {
                f.r(v, c) = 1;
            }
        }
        if (side == Side::In) {
            map.images(layout.first[v], v) = 1;
        } else {
            for (std::size_t j = 0; j < layout.count[v]; ++j) map.images(layout.first[v] + j, v) = 1;
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& old = g.edge(e);
        if (side == Side::In) {
            f.r(old.source, layout.first[old.target] + cls[e]) += 1;
        } else {
            f.s(layout.first[old.source] + cls[e], old.target) += 1;
        }
    }
    return {MultiGraph(classes, std::move(edges), split_labels(g, p)), std::move(f), std::move(map)};
}

std::vector<std::vector<VertexId>> normalize_blocks(const MultiGraph& g, std::span<const std::vector<VertexId>> blocks) {
    std::vector<std::vector<VertexId>> out(blocks.begin(), blocks.end());
    std::vector<bool> seen(g.vertex_count(), false);
    for (auto& block : out) {
        if (block.empty()) throw PreconditionError("amalgamation: empty block");
        std::sort(block.begin(), block.end());
        for (VertexId v : block) {
            check_vertex(g, v, "amalgamation");
            if (seen[v]) throw PreconditionError("amalgamation: vertex " + std::to_string(v) + " appears in two blocks");
            seen[v] = true;
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!seen[v]) throw PreconditionError("amalgamation: vertex " + std::to_string(v) + " is in no block");
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

// Label of the vertex replacing a block: the common stem when members are
// named stem#1, stem#2, ...; otherwise the members joined by '+'.
std::string block_label(const MultiGraph& g, const std::vector<VertexId>& block) {
    if (block.size() == 1) return g.label(block.front());
    std::string stem;
    bool common = true;
    for (std::size_t i = 0; i < block.size() && common; ++i) {
        const std::string& label = g.label(block[i]);
        const std::string suffix = "#" + std::to_string(i + 1);
        if (label.size() <= suffix.size() || label.compare(label.size() - suffix.size(), suffix.size(), suffix) != 0) {
            common = false;
            break;
        }
        const std::string s = label.substr(0, label.size() - suffix.size());
        if (i == 0) {
            stem = s;
        } else if (s != stem) {
            common = false;
        }
    }
    if (common) return stem;
    std::string joined;
    for (VertexId v : block) joined += (joined.empty() ? "" : "+") + g.label(v);
    return joined;
}

// Amalgamation along `side`: for an in-amalgamation, members of a block must
// share their rows (out-structure) and the partition lives on in-edges.
Amalgamation amalgamate(const MultiGraph& g, std::span<const std::vector<VertexId>> raw_blocks, Side side) {
    const char* name = side == Side::In ? "in-amalgamation" : "out-amalgamation";
    auto blocks = normalize_blocks(g, raw_blocks);
    const std::size_t m = blocks.size();

    std::vector<std::size_t> block_of(g.vertex_count()), position(g.vertex_count());
    for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            block_of[blocks[b][i]] = b;
            position[blocks[b][i]] = i;
        }
    }

    const IntMatrix a = incidence_matrix(g);
    for (const auto& block : blocks) {
        for (std::size_t i = 1; i < block.size(); ++i) {
            for (VertexId u = 0; u < g.vertex_count(); ++u) {
                const bool same = side == Side::In ? a(block[0], u) == a(block[i], u) : a(u, block[0]) == a(u, block[i]);
                if (!same) {
                    throw PreconditionError(std::string(name) + ": vertices " + std::to_string(block[0]) + " and " +
                                            std::to_string(block[i]) + " differ in " +
                                            (side == Side::In ? "row " : "column ") + std::to_string(u));
                }
            }
        }
        if (block.size() > 1) {
            for (VertexId v : block) {
                const std::size_t degree = side == Side::In ? g.in_degree(v) : g.out_degree(v);
                if (degree == 0) {
                    throw PreconditionError(std::string(name) + ": vertex " + std::to_string(v) + " has no " +
                                            (side == Side::In ? "incoming" : "outgoing") +
                                            " edges but shares a block");
                }
            }
        }
    }

    // Each edge at the block's representative gives one edge of the quotient,
    // classed by the position of the vertex at its other end.
    std::vector<Edge> edges;
    Partition partition;
    partition.classes.resize(m);
    for (std::size_t b = 0; b < m; ++b) {
        const VertexId v = blocks[b].front();
        const std::size_t degree = side == Side::In ? g.in_degree(v) : g.out_degree(v);
        if (degree > 0) partition.classes[b].resize(blocks[b].size());
    }
    for (std::size_t b = 0; b < m; ++b) {
        const VertexId rep = blocks[b].front();
        for (EdgeId e : side == Side::In ? g.out_edges(rep) : g.in_edges(rep)) {
            const VertexId other = side == Side::In ? g.edge(e).target : g.edge(e).source;
            const std::size_t ob = block_of[other];
            partition.classes[ob][position[other]].push_back(edges.size());
            edges.push_back(side == Side::In ? Edge{b, ob} : Edge{ob, b});
        }
    }
    for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t i = 0; i < partition.classes[b].size(); ++i) {
            if (partition.classes[b][i].empty()) {
                throw PreconditionError(std::string(name) + ": vertex " + std::to_string(blocks[b][i]) +
                                        " would be an empty class");
            }
        }
    }

    std::vector<std::string> labels;
    for (const auto& block : blocks) labels.push_back(block_label(g, block));
    MultiGraph quotient(m, std::move(edges), std::move(labels));

    std::vector<VertexId> order;
    for (const auto& block : blocks) order.insert(order.end(), block.begin(), block.end());
    const MultiGraph resplit = side == Side::In ? in_split(quotient, partition).graph : out_split(quotient, partition).graph;
    if (!same_incidence(resplit, reorder_vertices(g, order))) {
        throw PreconditionError(std::string(name) + ": splitting the quotient does not reproduce the graph");
    }
    return {std::move(quotient), std::move(partition), std::move(blocks)};
}

void validate_delay_vector(const MultiGraph& g, const DrinenVector& d, Side side) {
    const char* kind = side == Side::Out ? "source-vector" : "range-vector";
    if (d.vertex.size() != g.vertex_count() || d.edge.size() != g.edge_count()) {
        throw PreconditionError(std::string(kind) + ": expected " + std::to_string(g.vertex_count()) + " vertex and " +
                                std::to_string(g.edge_count()) + " edge values");
    }
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
        const auto edges = side == Side::Out ? g.out_edges(w) : g.in_edges(w);
        if (edges.empty()) continue;
        std::uint64_t best = 0;
        for (EdgeId e : edges) best = std::max(best, d.edge[e]);
        if (d.vertex[w] != best) {
            throw PreconditionError(std::string(kind) + ": vertex " + std::to_string(w) + " has value " +
                                    std::to_string(d.vertex[w]) + " but the maximum over its " +
                                    (side == Side::Out ? "out" : "in") + "-edges is " + std::to_string(best));
        }
    }
    std::uint64_t total = 0;
    for (auto x : d.vertex) {
        total += x;
        if (x > 100000 || total > 100000) throw LimitError(std::string(kind) + ": delays too long");
    }
}

MultiGraph delay(const MultiGraph& g, const DrinenVector& d, Side side) {
    validate_delay_vector(g, d, side);
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> chain_start(n);  // index of v^1
    std::vector<std::string> labels(g.labels().begin(), g.labels().end());
    std::size_t next = n;
    const char* mark = side == Side::Out ? "^" : "_";
    for (VertexId v = 0; v < n; ++v) {
        chain_start[v] = next;
        for (std::uint64_t i = 1; i <= d.vertex[v]; ++i) labels.push_back(g.label(v) + mark + std::to_string(i));
        next += d.vertex[v];
    }
    auto level = [&](VertexId v, std::uint64_t i) { return i == 0 ? v : chain_start[v] + i - 1; };

    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& old = g.edge(e);
        if (side == Side::Out) {
            edges.push_back({level(old.source, d.edge[e]), old.target});
        } else {
            edges.push_back({old.source, level(old.target, d.edge[e])});
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        for (std::uint64_t i = 1; i <= d.vertex[v]; ++i) {
            if (side == Side::Out) {
                edges.push_back({level(v, i - 1), level(v, i)});
            } else {
                edges.push_back({level(v, i), level(v, i - 1)});
            }
        }
    }
    return MultiGraph(next, std::move(edges), std::move(labels));
}

VertexId attachment(const MultiGraph& g, std::optional<VertexId> attach) {
    if (!attach) return default_attachment(g);
    check_vertex(g, *attach, "gadget attachment");
    if (!vertices_on_cycles(g)[*attach]) {
        throw PreconditionError("gadget attachment: vertex " + std::to_string(*attach) + " lies on no cycle");
    }
    return *attach;
}

MultiGraph add_gadget(const MultiGraph& g, VertexId c, bool with_source) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::vector<std::string> labels(g.labels().begin(), g.labels().end());
    const std::size_t extra = with_source ? 3 : 2;
    for (std::size_t i = 0; i < extra; ++i) labels.push_back(fresh_label(labels, default_label(n + i)));
    const VertexId n1 = n, n2 = n + 1;
    edges.push_back({c, n1});
    edges.push_back({n1, c});
    edges.push_back({n1, n1});
    edges.push_back({n1, n2});
    edges.push_back({n2, n1});
    edges.push_back({n2, n2});
    if (with_source) edges.push_back({n + 2, c});
    return MultiGraph(n + extra, std::move(edges), std::move(labels));
}

}  // namespace

void validate_partition(const MultiGraph& g, const Partition& p, Side side) {
    const char* name = side_name(side);
    if (p.classes.size() != g.vertex_count()) {
        throw PreconditionError(std::string(name) + " partition: expected classes for " +
                                std::to_string(g.vertex_count()) + " vertices, got " +
                                std::to_string(p.classes.size()));
    }
    std::vector<bool> used(g.edge_count(), false);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto edges = edge_set(g, v, side);
        std::size_t covered = 0;
        for (std::size_t i = 0; i < p.classes[v].size(); ++i) {
            const auto& cls = p.classes[v][i];
            if (cls.empty()) {
                throw PreconditionError(std::string(name) + " partition: class " + std::to_string(i + 1) +
                                        " of vertex " + std::to_string(v) + " is empty");
            }
            for (EdgeId e : cls) {
                if (!std::binary_search(edges.begin(), edges.end(), e)) {
                    throw PreconditionError(std::string(name) + " partition: edge " + std::to_string(e) +
                                            " does not belong to vertex " + std::to_string(v));
                }
                if (used[e]) {
                    throw PreconditionError(std::string(name) + " partition: edge " + std::to_string(e) +
                                            " appears twice");
                }
                used[e] = true;
                ++covered;
            }
        }
        if (covered != edges.size()) {
            throw PreconditionError(std::string(name) + " partition: the classes of vertex " + std::to_string(v) +
                                    " miss " + std::to_string(edges.size() - covered) + " of its edges");
        }
    }
}

Partition coarsest_partition(const MultiGraph& g, Side side) {
    Partition p;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto edges = edge_set(g, v, side);
        p.classes.emplace_back();
        if (!edges.empty()) p.classes.back().push_back(std::move(edges));
    }
    return p;
}

Partition finest_partition(const MultiGraph& g, Side side) {
    Partition p;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        p.classes.emplace_back();
        for (EdgeId e : edge_set(g, v, side)) p.classes.back().push_back({e});
    }
    return p;
}

std::vector<std::size_t> class_of_edges(const MultiGraph& g, const Partition& p, Side side) {
    validate_partition(g, p, side);
    std::vector<std::size_t> cls(g.edge_count(), 0);
    for (const auto& classes : p.classes) {
        for (std::size_t i = 0; i < classes.size(); ++i) {
            for (EdgeId e : classes[i]) cls[e] = i;
        }
    }
    return cls;
}

SplitResult in_split(const MultiGraph& g, const Partition& p) { return split(g, p, Side::In); }

SplitResult out_split(const MultiGraph& g, const Partition& p) { return split(g, p, Side::Out); }

Amalgamation in_amalgamate(const MultiGraph& g, std::span<const std::vector<VertexId>> blocks) {
    return amalgamate(g, blocks, Side::In);
}

Amalgamation out_amalgamate(const MultiGraph& g, std::span<const std::vector<VertexId>> blocks) {
    return amalgamate(g, blocks, Side::Out);
}

MultiGraph eliminate_source(const MultiGraph& g, VertexId v) {
    check_vertex(g, v, "source elimination");
    if (g.in_degree(v) != 0) {
        throw PreconditionError("source elimination: vertex " + std::to_string(v) + " receives " +
                                std::to_string(g.in_degree(v)) + " edges");
    }
    if (g.vertex_count() < 2) throw PreconditionError("source elimination: the graph has a single vertex");
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (e.source == v) continue;
        edges.push_back({e.source - (e.source > v), e.target - (e.target > v)});
    }
    std::vector<std::string> labels(g.labels().begin(), g.labels().end());
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(v));
    return MultiGraph(g.vertex_count() - 1, std::move(edges), std::move(labels));
}

VertexClassMap source_elimination_map(const MultiGraph& g, VertexId v) {
    check_vertex(g, v, "source elimination");
    const std::size_t n = g.vertex_count();
    VertexClassMap m{IntMatrix(n, n - 1)};
    for (VertexId w = 0; w + 1 < n; ++w) m.images(w + (w >= v), w) = 1;
    return m;
}

MultiGraph expand(const MultiGraph& g, VertexId v) {
    check_vertex(g, v, "expansion");
    const VertexId star = g.vertex_count();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({e.source == v ? star : e.source, e.target});
    edges.push_back({v, star});
    std::vector<std::string> labels(g.labels().begin(), g.labels().end());
    labels.push_back(fresh_label(labels, g.label(v) + "*"));
    return MultiGraph(g.vertex_count() + 1, std::move(edges), std::move(labels));
}

VertexClassMap expansion_map(const MultiGraph& g, VertexId v) {
    check_vertex(g, v, "expansion");
    const std::size_t n = g.vertex_count();
    VertexClassMap m{IntMatrix(n + 1, n)};
    for (VertexId w = 0; w < n; ++w) m.images(w, w) = 1;
    return m;
}

MultiGraph contract(const MultiGraph& g, VertexId v, VertexId v_star) {
    check_vertex(g, v, "contraction");
    check_vertex(g, v_star, "contraction");
    if (v == v_star) throw PreconditionError("contraction: v and v* must differ");
    const auto out = g.out_edges(v);
    if (out.size() != 1) {
        throw PreconditionError("contraction: vertex " + std::to_string(v) + " has " + std::to_string(out.size()) +
                                " out-edges, expected exactly one");
    }
    const EdgeId f = out.front();
    if (g.edge(f).target != v_star) {
        throw PreconditionError("contraction: the out-edge of vertex " + std::to_string(v) + " ends at " +
                                std::to_string(g.edge(f).target) + ", not at " + std::to_string(v_star));
    }
    if (g.in_degree(v_star) != 1) {
        throw PreconditionError("contraction: vertex " + std::to_string(v_star) + " has " +
                                std::to_string(g.in_degree(v_star)) + " in-edges, expected exactly one");
    }
    auto renumber = [&](VertexId u) {
        if (u == v_star) u = v;
        return u - (u > v_star);
    };
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e == f) continue;
        edges.push_back({renumber(g.edge(e).source), renumber(g.edge(e).target)});
    }
    std::vector<std::string> labels(g.labels().begin(), g.labels().end());
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(v_star));
    return MultiGraph(g.vertex_count() - 1, std::move(edges), std::move(labels));
}

DrinenVector DrinenVector::zero(const MultiGraph& g) {
    return {std::vector<std::uint64_t>(g.vertex_count(), 0), std::vector<std::uint64_t>(g.edge_count(), 0)};
}

void validate_source_vector(const MultiGraph& g, const DrinenVector& d) { validate_delay_vector(g, d, Side::Out); }

void validate_range_vector(const MultiGraph& g, const DrinenVector& d) { validate_delay_vector(g, d, Side::In); }

MultiGraph out_delay(const MultiGraph& g, const DrinenVector& d) { return delay(g, d, Side::Out); }

MultiGraph in_delay(const MultiGraph& g, const DrinenVector& d) { return delay(g, d, Side::In); }

bool is_proper(const MultiGraph& g, const Partition& p) {
    validate_partition(g, p, Side::In);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.out_degree(v) == 0 && p.class_count(v) > 1) return false;
    }
    return true;
}

DrinenVector in_split_delay_vector(const MultiGraph& g, const Partition& p) {
    const auto cls = class_of_edges(g, p, Side::In);
    DrinenVector d = DrinenVector::zero(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (p.class_count(v) > 0) d.vertex[v] = p.class_count(v) - 1;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) d.edge[e] = cls[e];
    return d;
}

MultiGraph shift(const MultiGraph& g, VertexId v, VertexId w) {
    check_vertex(g, v, "shift");
    check_vertex(g, w, "shift");
    if (v == w) throw PreconditionError("shift: v and w must differ");
    if (g.out_degree(v) == 0) throw PreconditionError("shift: vertex " + std::to_string(v) + " is a sink");
    if (g.out_degree(w) == 0) throw PreconditionError("shift: vertex " + std::to_string(w) + " is a sink");
    const IntMatrix a = incidence_matrix(g);
    for (VertexId j = 0; j < g.vertex_count(); ++j) {
        if (a(v, j) < a(w, j)) {
            throw PreconditionError("shift: column " + std::to_string(j) + ": vertex " + std::to_string(v) +
                                    " has " + a(v, j).get_str() + " edges there but vertex " + std::to_string(w) +
                                    " has " + a(w, j).get_str());
        }
    }
    // Match each out-edge of w with the first unused parallel out-edge of v.
    std::vector<bool> removed(g.edge_count(), false);
    const auto v_out = g.out_edges(v);
    for (EdgeId e : g.out_edges(w)) {
        for (EdgeId x : v_out) {
            if (!removed[x] && g.edge(x).target == g.edge(e).target) {
                removed[x] = true;
                break;
            }
        }
    }
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!removed[e]) edges.push_back(g.edge(e));
    }
    edges.push_back({v, w});
    return MultiGraph(g.vertex_count(), std::move(edges), {g.labels().begin(), g.labels().end()});
}

VertexId default_attachment(const MultiGraph& g) {
    const auto on_cycle = vertices_on_cycles(g);
    for (VertexId v = g.vertex_count(); v-- > 0;) {
        if (on_cycle[v]) return v;
    }
    throw PreconditionError("the graph has no cycle to attach the gadget to");
}

MultiGraph minus(const MultiGraph& g, std::optional<VertexId> attach) {
    return add_gadget(g, attachment(g, attach), false);
}

MultiGraph minus1(const MultiGraph& g, std::optional<VertexId> attach) {
    return add_gadget(g, attachment(g, attach), true);
}

VertexClassMap minus_map(const MultiGraph& g, std::optional<VertexId> attach) {
    attachment(g, attach);
    const std::size_t n = g.vertex_count();
    VertexClassMap m{IntMatrix(n + 2, n)};
    for (VertexId v = 0; v < n; ++v) m.images(v, v) = 1;
    return m;
}

VertexClassMap minus1_map(const MultiGraph& g, std::optional<VertexId> attach) {
    const VertexId c = attachment(g, attach);
    const std::size_t n = g.vertex_count();
    VertexClassMap m{IntMatrix(n, n + 3)};
    for (VertexId v = 0; v < n; ++v) m.images(v, v) = 1;
    m.images(c, n + 1) = -1;
    m.images(c, n + 2) = 1;
    return m;
}

bool verify_vertex_class_map(const MultiGraph& src, const MultiGraph& tgt, const VertexClassMap& m) {
    if (m.source_count() != src.vertex_count() || m.target_count() != tgt.vertex_count()) return false;
    const IntMatrix rel_src = franks_matrix(src);
    const IntMatrix rel_tgt = franks_matrix(tgt);
    const IntMatrix image = m.images * rel_src;
    for (std::size_t j = 0; j < image.cols(); ++j) {
        if (!in_column_span(rel_tgt, image.column(j))) return false;
    }
    if (!group_iso(cokernel(rel_src).group, cokernel(rel_tgt).group)) return false;
    // A surjection between isomorphic finitely generated abelian groups is an isomorphism.
    const IntMatrix spanning = m.images.concat_columns(rel_tgt);
    const auto snf = smith_normal_form(spanning);
    const auto diag = snf.diagonal_entries();
    if (diag.size() < tgt.vertex_count()) return false;
    return std::all_of(diag.begin(), diag.end(), [](const Integer& x) { return x == 1; });
}

bool maps_unit_to_unit(const MultiGraph& src, const MultiGraph& tgt, const VertexClassMap& m) {
    if (m.source_count() != src.vertex_count() || m.target_count() != tgt.vertex_count()) return false;
    const IntVector ones(src.vertex_count(), Integer(1));
    IntVector diff = m.images.apply(ones);
    for (auto& x : diff) x -= 1;
    return in_column_span(franks_matrix(tgt), diff);
}

}  // namespace lpaflow
