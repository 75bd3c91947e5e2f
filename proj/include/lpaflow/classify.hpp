#pragma once

#include "lpaflow/invariants.hpp"

#include <string>
#include <vector>

namespace lpaflow {

enum class Level { MoritaEquivalent, Isomorphic, NotMoritaEquivalent, NotIsomorphic, Unknown };

const char* to_string(Level level);

/// Outcome of comparing two graphs' algebras.
///
/// A verdict can hold several levels at once, e.g. MoritaEquivalent together
/// with NotIsomorphic, or MoritaEquivalent with Unknown when only the
/// isomorphism question is open. Isomorphic always comes with
/// MoritaEquivalent. `tag` is a stable machine-readable reason:
///
///   k0-group-mismatch         the Grothendieck groups differ
///   franks-triple-equivalent  group, unit class and determinant all agree
///   unit-class-obstruction    same group and determinant, unit classes inequivalent
///   determinant-sign-gap      same group, determinants of opposite sign (open case)
///   pointed-decision-cap      the unit-class comparison hit its resource bound
///   hypotheses-unmet          an input is not purely infinite simple (or has sources
///                             where the transpose comparison needs none)
struct Verdict {
    std::vector<Level> levels;  // sorted by enum value, no repeats
    std::string tag;
    std::string text;
    FranksTriple left;
    FranksTriple right;
    bool left_pis = false;
    bool right_pis = false;

    bool has(Level level) const;
    // Levels joined by " + ", e.g. "MoritaEquivalent + NotIsomorphic".
    std::string summary() const;
};

Verdict decide(const MultiGraph& e, const MultiGraph& f, const PointedOptions& options = {});

/// Compares g with its transpose graph, which has a Morita equivalent algebra
/// when g is purely infinite simple without sources.
Verdict decide_transpose(const MultiGraph& g, const PointedOptions& options = {});

nlohmann::ordered_json to_json(const Verdict& v);

}  // namespace lpaflow
