#include "support/generators.hpp"

#include "lpaflow/flowsearch.hpp"

#include <algorithm>
#include <numeric>

namespace testsupport {

using namespace lpaflow;

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = dist(rng);
    }
    return a;
}

Partition random_partition(std::mt19937_64& rng, const MultiGraph& g, Side side, std::size_t max_classes) {
    Partition p;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto edges = side == Side::In ? g.in_edges(v) : g.out_edges(v);
        p.classes.emplace_back();
        if (edges.empty()) continue;
        std::uniform_int_distribution<std::size_t> k_dist(1, std::min(max_classes, edges.size()));
        const std::size_t k = k_dist(rng);
        std::vector<std::vector<EdgeId>> classes(k);
        std::uniform_int_distribution<std::size_t> pick(0, k - 1);
        for (EdgeId e : edges) classes[pick(rng)].push_back(e);
        for (auto& c : classes) {
            if (!c.empty()) p.classes.back().push_back(std::move(c));
        }
    }
    return p;
}

std::optional<Move> random_single_split(std::mt19937_64& rng, const MultiGraph& g, MoveKind kind) {
    const Side side = kind == MoveKind::InSplit ? Side::In : Side::Out;
    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if ((side == Side::In ? g.in_degree(v) : g.out_degree(v)) >= 2) candidates.push_back(v);
    }
    if (candidates.empty()) return std::nullopt;
    const VertexId v = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    auto edges = side == Side::In ? g.in_edges(v) : g.out_edges(v);
    std::shuffle(edges.begin(), edges.end(), rng);
    // Cut the shuffled list in two nonempty pieces.
    const std::size_t cut = std::uniform_int_distribution<std::size_t>(1, edges.size() - 1)(rng);
    std::vector<EdgeId> first(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(cut));
    std::vector<EdgeId> second(edges.begin() + static_cast<std::ptrdiff_t>(cut), edges.end());
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());
    Move m;
    m.kind = kind;
    m.classes[v] = {first, second};
    return m;
}

Move random_standard_move(std::mt19937_64& rng, const MultiGraph& g, std::size_t max_vertices) {
    SearchOptions options;
    options.max_vertices = max_vertices;
    options.max_entry = 1000;
    std::vector<Move> moves = standard_moves(g, options);
    // Prefer the rarer move kinds equally with the plentiful splits.
    std::vector<MoveKind> kinds;
    for (const Move& m : moves) {
        if (std::find(kinds.begin(), kinds.end(), m.kind) == kinds.end()) kinds.push_back(m.kind);
    }
    const MoveKind kind = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
    std::vector<Move> of_kind;
    for (Move& m : moves) {
        if (m.kind == kind) of_kind.push_back(std::move(m));
    }
    return of_kind[std::uniform_int_distribution<std::size_t>(0, of_kind.size() - 1)(rng)];
}

PointedGroup random_automorphic_image(std::mt19937_64& rng, const PointedGroup& p) {
    const auto& torsion = p.group().torsion();
    const std::size_t k = torsion.size();
    const std::size_t r = p.group().free_rank();
    IntVector x = p.point();
    std::uniform_int_distribution<int> small(-3, 3);
    for (int round = 0; round < 12; ++round) {
        const int op = std::uniform_int_distribution<int>(0, 4)(rng);
        if (op == 0 && k >= 1) {
            // Scale a torsion coordinate by a unit.
            const std::size_t i = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
            Integer u;
            do {
                u = std::uniform_int_distribution<long>(1, 1000)(rng);
            } while (gcd(u, torsion[i]) != 1);
            x[i] = (x[i] * u) % torsion[i];
        } else if (op == 1 && k >= 2) {
            // Generator substitution e_i -> e_i + c e_j: coordinate j gains c x_i,
            // well defined when d_j divides c d_i.
            const std::size_t i = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
            const std::size_t j = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
            if (i == j) continue;
            Integer c = small(rng);
            if (j > i) c *= torsion[j] / torsion[i];
            x[j] = ((x[j] + c * x[i]) % torsion[j] + torsion[j]) % torsion[j];
        } else if (op == 2 && k >= 1 && r >= 1) {
            // A free generator picks up a torsion component.
            const std::size_t j = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
            const std::size_t l = std::uniform_int_distribution<std::size_t>(0, r - 1)(rng);
            x[j] = ((x[j] + Integer(small(rng)) * x[k + l]) % torsion[j] + torsion[j]) % torsion[j];
        } else if (op == 3 && r >= 2) {
            const std::size_t l = std::uniform_int_distribution<std::size_t>(0, r - 1)(rng);
            const std::size_t m = std::uniform_int_distribution<std::size_t>(0, r - 1)(rng);
            if (l != m) x[k + l] += Integer(small(rng)) * x[k + m];
        } else if (op == 4 && r >= 1) {
            const std::size_t l = std::uniform_int_distribution<std::size_t>(0, r - 1)(rng);
            x[k + l] = -x[k + l];
        }
    }
    return PointedGroup(p.group(), x);
}

MultiGraph random_relabel(std::mt19937_64& rng, const MultiGraph& g) {
    std::vector<VertexId> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    return reorder_vertices(g, order);
}

}  // namespace testsupport
