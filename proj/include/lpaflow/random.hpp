#pragma once

#include "lpaflow/graph.hpp"

#include <cstdint>
#include <random>

namespace lpaflow {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Uniform over incidence matrices with n in [min_vertices, max_vertices] and
/// entries in [0, max_entry], conditioned (by rejection) on the graph being
/// irreducible and not a single cycle. Such graphs are purely infinite simple
/// and have no sources or sinks.
MultiGraph random_irreducible_graph(std::mt19937_64& rng, std::size_t min_vertices, std::size_t max_vertices,
                                    unsigned max_entry);

/// Entries in [0, max_entry] with no structural condition.
MultiGraph random_graph(std::mt19937_64& rng, std::size_t vertices, unsigned max_entry);

}  // namespace lpaflow
