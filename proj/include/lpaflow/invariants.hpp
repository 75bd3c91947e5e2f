#pragma once

#include "lpaflow/exactla.hpp"
#include "lpaflow/graph.hpp"

#include "json.hpp"

namespace lpaflow {

/// I - A^t for the incidence matrix A of g.
IntMatrix franks_matrix(const MultiGraph& g);

/// coker(I - A^t) with the class of the all-ones vector, and det(I - A^t).
struct FranksTriple {
    PointedGroup pointed;
    Integer determinant;
};

FranksTriple franks_triple(const MultiGraph& g);

/// Groups isomorphic and determinants equal.
bool equiv_det_pair(const FranksTriple& a, const FranksTriple& b);

/// Groups isomorphic by an isomorphism matching the unit classes.
Decision equiv_unitary_pair(const FranksTriple& a, const FranksTriple& b, const PointedOptions& options = {});

/// Unitary pairs equivalent and determinants equal.
Decision equiv_triple(const FranksTriple& a, const FranksTriple& b, const PointedOptions& options = {});

/// {"schema":1,"group":{"torsion":[..],"free_rank":r},"unit":[..],"det":d,"pis":b}
/// Integers too large for 64 bits are written as decimal strings.
nlohmann::ordered_json to_json(const FranksTriple& t, bool purely_infinite_simple);

}  // namespace lpaflow
