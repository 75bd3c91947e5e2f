#include "lpaflow/graph.hpp"

#include "lpaflow/errors.hpp"

#include <algorithm>
#include <charconv>

namespace lpaflow {

std::string default_label(VertexId v) { return "v" + std::to_string(v); }

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : edges_(std::move(edges)), labels_(std::move(labels)) {
    if (vertex_count == 0) {
        throw PreconditionError("a graph needs at least one vertex");
    }
    if (labels_.empty()) {
        labels_.reserve(vertex_count);
        for (VertexId v = 0; v < vertex_count; ++v) labels_.push_back(default_label(v));
    } else if (labels_.size() != vertex_count) {
        throw PreconditionError("label count does not match vertex count");
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e].source >= vertex_count || edges_[e].target >= vertex_count) {
            throw PreconditionError("edge " + std::to_string(e) + " has an endpoint outside the vertex set");
        }
    }
}

MultiGraph MultiGraph::from_matrix(const IntMatrix& a, std::vector<std::string> labels) {
    if (!a.square()) {
        throw PreconditionError("incidence matrix must be square");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Integer& k = a(i, j);
            if (k < 0) {
                throw PreconditionError("incidence matrix entries must be non-negative");
            }
            if (!k.fits_ulong_p() || k.get_ui() > 1000000) {
                throw PreconditionError("edge multiplicity too large");
            }
            for (unsigned long c = 0; c < k.get_ui(); ++c) {
                edges.push_back({i, j});
            }
        }
    }
    return MultiGraph(a.rows(), std::move(edges), std::move(labels));
}

std::vector<EdgeId> MultiGraph::out_edges(VertexId v) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        if (edges_[e].source == v) out.push_back(e);
    }
    return out;
}

std::vector<EdgeId> MultiGraph::in_edges(VertexId v) const {
    std::vector<EdgeId> in;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        if (edges_[e].target == v) in.push_back(e);
    }
    return in;
}

std::size_t MultiGraph::out_degree(VertexId v) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.source == v; }));
}

std::size_t MultiGraph::in_degree(VertexId v) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.target == v; }));
}

std::optional<VertexId> MultiGraph::find_vertex(std::string_view ref) const {
    for (VertexId v = 0; v < labels_.size(); ++v) {
        if (labels_[v] == ref) return v;
    }
    VertexId index = 0;
    const auto [ptr, ec] = std::from_chars(ref.data(), ref.data() + ref.size(), index);
    if (ec == std::errc() && ptr == ref.data() + ref.size() && index < labels_.size()) {
        return index;
    }
    return std::nullopt;
}

IntMatrix incidence_matrix(const MultiGraph& g) {
    IntMatrix a(g.vertex_count(), g.vertex_count());
    for (const Edge& e : g.edges()) {
        a(e.source, e.target) += 1;
    }
    return a;
}

MultiGraph transpose(const MultiGraph& g) {
    std::vector<Edge> reversed;
    reversed.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        reversed.push_back({e.target, e.source});
    }
    return MultiGraph(g.vertex_count(), std::move(reversed), {g.labels().begin(), g.labels().end()});
}

std::vector<VertexId> sources(const MultiGraph& g) {
    std::vector<bool> receives(g.vertex_count(), false);
    for (const Edge& e : g.edges()) receives[e.target] = true;
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!receives[v]) out.push_back(v);
    }
    return out;
}

std::vector<VertexId> sinks(const MultiGraph& g) {
    std::vector<bool> emits(g.vertex_count(), false);
    for (const Edge& e : g.edges()) emits[e.source] = true;
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!emits[v]) out.push_back(v);
    }
    return out;
}

namespace {

std::vector<std::vector<VertexId>> successor_lists(const MultiGraph& g) {
    std::vector<std::vector<VertexId>> succ(g.vertex_count());
    for (const Edge& e : g.edges()) succ[e.source].push_back(e.target);
    return succ;
}

std::vector<bool> reachable_from(const std::vector<std::vector<VertexId>>& succ, VertexId start) {
    std::vector<bool> seen(succ.size(), false);
    std::vector<VertexId> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : succ[v]) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

std::vector<std::size_t> strongly_connected_components(const MultiGraph& g) {
    // Iterative Tarjan.
    const std::size_t n = g.vertex_count();
    const auto succ = successor_lists(g);
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnset), low(n, 0), component(n, kUnset);
    std::vector<bool> on_stack(n, false);
    std::vector<VertexId> stack;
    std::size_t next_index = 0;
    std::size_t next_component = 0;

    struct Frame {
        VertexId v;
        std::size_t child;
    };
    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < succ[f.v].size()) {
                const VertexId w = succ[f.v][f.child++];
                if (index[w] == kUnset) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const VertexId v = f.v;
            if (low[v] == index[v]) {
                while (true) {
                    const VertexId w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = next_component;
                    if (w == v) break;
                }
                ++next_component;
            }
            call.pop_back();
            if (!call.empty()) {
                low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }

    // Renumber by smallest member.
    std::vector<std::size_t> renumber(next_component, kUnset);
    std::size_t fresh = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (renumber[component[v]] == kUnset) renumber[component[v]] = fresh++;
        component[v] = renumber[component[v]];
    }
    return component;
}

std::vector<bool> vertices_on_cycles(const MultiGraph& g) {
    const auto component = strongly_connected_components(g);
    std::vector<std::size_t> size(g.vertex_count(), 0);
    for (auto c : component) ++size[c];
    std::vector<bool> on_cycle(g.vertex_count(), false);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (size[component[v]] > 1) on_cycle[v] = true;
    }
    for (const Edge& e : g.edges()) {
        if (e.source == e.target) on_cycle[e.source] = true;
    }
    return on_cycle;
}

std::optional<std::vector<VertexId>> exitless_cycle(const MultiGraph& g) {
    const std::size_t n = g.vertex_count();
    constexpr VertexId kNone = static_cast<VertexId>(-1);
    std::vector<std::size_t> out_degree(n, 0);
    std::vector<VertexId> next(n, kNone);
    for (const Edge& e : g.edges()) {
        ++out_degree[e.source];
        next[e.source] = e.target;
    }
    // The out-degree-one vertices form a functional graph whose cycles are
    // exactly the cycles without exits.
    std::optional<std::vector<VertexId>> best;
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on current walk, 2 done
    for (VertexId start = 0; start < n; ++start) {
        if (state[start] != 0 || out_degree[start] != 1) continue;
        std::vector<VertexId> walk;
        VertexId v = start;
        while (out_degree[v] == 1 && state[v] == 0) {
            state[v] = 1;
            walk.push_back(v);
            v = next[v];
        }
        if (out_degree[v] == 1 && state[v] == 1) {
            std::vector<VertexId> cycle(std::find(walk.begin(), walk.end(), v), walk.end());
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
            if (!best || cycle < *best) best = std::move(cycle);
        }
        for (VertexId w : walk) state[w] = 2;
    }
    return best;
}

GraphReport classify_graph(const MultiGraph& g) {
    GraphReport r;
    const std::size_t n = g.vertex_count();
    const auto src = sources(g);
    const auto snk = sinks(g);
    r.has_sources = !src.empty();
    r.has_sinks = !snk.empty();
    r.essential = !r.has_sources && !r.has_sinks;

    const auto component = strongly_connected_components(g);
    const std::size_t component_count = *std::max_element(component.begin(), component.end()) + 1;
    r.irreducible = component_count == 1;

    bool degrees_one = true;
    for (VertexId v = 0; v < n && degrees_one; ++v) {
        degrees_one = g.in_degree(v) == 1 && g.out_degree(v) == 1;
    }
    r.trivial = degrees_one && r.irreducible;

    r.every_cycle_has_exit = !exitless_cycle(g).has_value();

    const auto on_cycle = vertices_on_cycles(g);
    r.has_cycle = std::find(on_cycle.begin(), on_cycle.end(), true) != on_cycle.end();

    // One representative per cyclic component, plus every sink.
    std::vector<VertexId> targets;
    std::vector<bool> component_taken(component_count, false);
    for (VertexId v = 0; v < n; ++v) {
        if (on_cycle[v] && !component_taken[component[v]]) {
            component_taken[component[v]] = true;
            targets.push_back(v);
        }
    }
    targets.insert(targets.end(), snk.begin(), snk.end());

    const auto succ = successor_lists(g);
    r.every_vertex_reaches_cycle_or_sink = true;
    for (VertexId v = 0; v < n && r.every_vertex_reaches_cycle_or_sink; ++v) {
        const auto seen = reachable_from(succ, v);
        for (VertexId t : targets) {
            if (!seen[t]) {
                r.every_vertex_reaches_cycle_or_sink = false;
                break;
            }
        }
    }

    r.simple_lpa = r.every_cycle_has_exit && r.every_vertex_reaches_cycle_or_sink;
    r.purely_infinite_simple = r.simple_lpa && r.has_cycle;
    return r;
}

namespace {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const MultiGraph& g) : n_(g.vertex_count()), a_(n_ * n_, 0) {
        for (const Edge& e : g.edges()) ++a_[e.source * n_ + e.target];
        current_.resize(n_ * n_);
        order_.resize(n_);
        used_.assign(n_, false);
    }

    CanonicalForm run() {
        descend(0);
        CanonicalForm form;
        form.n = n_;
        form.order = best_order_;
        form.matrix.resize(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                form.matrix[i * n_ + j] = a_[best_order_[i] * n_ + best_order_[j]];
            }
        }
        return form;
    }

private:
    std::uint32_t at(VertexId i, VertexId j) const { return a_[i * n_ + j]; }

    void descend(std::size_t k) {
        if (k == n_) {
            if (!have_best_ || current_ < best_) {
                best_ = current_;
                best_order_ = order_;
                have_best_ = true;
            }
            return;
        }
        const std::size_t begin = k * k;
        const std::size_t end = (k + 1) * (k + 1);
        for (VertexId u = 0; u < n_; ++u) {
            if (used_[u]) continue;
            std::size_t pos = begin;
            for (std::size_t i = 0; i < k; ++i) {
                current_[pos++] = at(order_[i], u);
                current_[pos++] = at(u, order_[i]);
            }
            current_[pos++] = at(u, u);
            if (have_best_ && std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<std::ptrdiff_t>(end),
                                                           current_.begin(), current_.begin() + static_cast<std::ptrdiff_t>(end))) {
                continue;  // prefix already worse than the best complete labelling
            }
            used_[u] = true;
            order_[k] = u;
            descend(k + 1);
            used_[u] = false;
        }
    }

    std::size_t n_;
    std::vector<std::uint32_t> a_;
    std::vector<std::uint32_t> current_;
    std::vector<std::uint32_t> best_;
    std::vector<VertexId> order_;
    std::vector<VertexId> best_order_;
    std::vector<bool> used_;
    bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const MultiGraph& g) {
    if (g.vertex_count() > kMaxIsomorphismVertices) {
        throw LimitError("canonical form refused: " + std::to_string(g.vertex_count()) + " vertices exceeds the cap of " +
                         std::to_string(kMaxIsomorphismVertices));
    }
    return CanonicalSearch(g).run();
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a).matrix == canonical_form(b).matrix;
}

bool same_incidence(const MultiGraph& a, const MultiGraph& b) {
    return a.vertex_count() == b.vertex_count() && incidence_matrix(a) == incidence_matrix(b);
}

MultiGraph reorder_vertices(const MultiGraph& g, std::span<const VertexId> order) {
    const std::size_t n = g.vertex_count();
    if (order.size() != n) {
        throw PreconditionError("vertex order has the wrong length");
    }
    std::vector<VertexId> position(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (order[k] >= n || position[order[k]] != n) {
            throw PreconditionError("vertex order is not a permutation");
        }
        position[order[k]] = k;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({position[e.source], position[e.target]});
    std::vector<std::string> labels(n);
    for (std::size_t k = 0; k < n; ++k) labels[k] = g.label(order[k]);
    return MultiGraph(n, std::move(edges), std::move(labels));
}

}  // namespace lpaflow
