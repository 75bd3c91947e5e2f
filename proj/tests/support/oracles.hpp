#pragma once

// Slow, obviously-correct reference computations used to check the library.

#include "lpaflow/exactla.hpp"
#include "lpaflow/graph.hpp"

#include <cstdint>
#include <vector>

namespace testsupport {

using lpaflow::Integer;
using lpaflow::IntMatrix;
using lpaflow::IntVector;

// Sum over all permutations (n <= 7).
Integer leibniz_det(const IntMatrix& a);

// Invariant factors d_k = D_k / D_(k-1), with D_k the gcd of all k x k minors.
// Returns min(rows, cols) entries, zeros last.
IntVector smith_by_minors(const IntMatrix& a);

// Every permutation order of the vertices, checking incidence equality.
bool isomorphic_by_permutations(const lpaflow::MultiGraph& a, const lpaflow::MultiGraph& b);

// Reachability closure by repeated squaring of the boolean adjacency.
std::vector<std::vector<bool>> reachability(const lpaflow::MultiGraph& g);

// A finite abelian group Z/d1 + ... + Z/dk with elements as residue vectors.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::uint64_t> factors);

    std::size_t order() const { return order_; }
    std::vector<std::uint64_t> element(std::size_t index) const;
    std::size_t index(const std::vector<std::uint64_t>& x) const;

    // orbit[i] = smallest element index in the Aut(G)-orbit of element i,
    // found by enumerating every endomorphism and keeping the bijective ones.
    std::vector<std::size_t> automorphism_orbits() const;

    // Enumeration cost |G|^k; callers skip groups where this is too large.
    std::uint64_t endomorphism_candidates() const;

private:
    std::vector<std::uint64_t> factors_;
    std::size_t order_;
};

}  // namespace testsupport
