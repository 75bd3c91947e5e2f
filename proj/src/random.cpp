#include "lpaflow/random.hpp"

#include "lpaflow/errors.hpp"

namespace lpaflow {

MultiGraph random_graph(std::mt19937_64& rng, std::size_t vertices, unsigned max_entry) {
    // Sparse matrices make for more interesting graphs than uniform entries.
    std::uniform_int_distribution<unsigned> entry(0, max_entry);
    std::bernoulli_distribution present(0.5);
    IntMatrix a(vertices, vertices);
    for (std::size_t i = 0; i < vertices; ++i) {
        for (std::size_t j = 0; j < vertices; ++j) {
            if (present(rng)) a(i, j) = entry(rng);
        }
    }
    return MultiGraph::from_matrix(a);
}

MultiGraph random_irreducible_graph(std::mt19937_64& rng, std::size_t min_vertices, std::size_t max_vertices,
                                    unsigned max_entry) {
    if (min_vertices == 0 || min_vertices > max_vertices || max_entry == 0) {
        throw PreconditionError("random_irreducible_graph: bad size or entry bounds");
    }
    std::uniform_int_distribution<std::size_t> size(min_vertices, max_vertices);
    for (;;) {
        const MultiGraph g = random_graph(rng, size(rng), max_entry);
        const GraphReport r = classify_graph(g);
        if (r.irreducible && !r.trivial && r.has_cycle) return g;
    }
}

}  // namespace lpaflow
