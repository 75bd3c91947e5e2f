#pragma once

#include "lpaflow/graph.hpp"
#include "lpaflow/moves.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lpaflow {

enum class MoveKind {
    EliminateSource,
    Expand,
    Contract,
    InSplit,
    OutSplit,
    InAmalgamate,
    OutAmalgamate,
    Shift,
    Minus,
    Minus1,
    OutDelay,
    InDelay,
};

// Script names: "eliminate-source", "expand", "in-split", ...
const char* to_string(MoveKind kind);
std::optional<MoveKind> move_kind_from_string(std::string_view name);

/// Expansion, contraction, the splits and the amalgamations.
bool is_standard(MoveKind kind);

/// One move with its arguments, in terms of vertex and edge ids of the graph it is applied to.
///
/// Omitted data takes defaults when the move is applied: a vertex without
/// split classes keeps all its edges in one class, a vertex outside every
/// amalgamation block forms its own block, and a vertex without a delay
/// gets the largest delay among its edges.
struct Move {
    MoveKind kind = MoveKind::Expand;
    // eliminate-source/expand: {v}; contract: {v, v*}; shift: {v, w};
    // minus/minus1: {} or {attachment vertex}.
    std::vector<VertexId> vertices;
    std::map<VertexId, std::vector<std::vector<EdgeId>>> classes;
    std::vector<std::vector<VertexId>> blocks;
    std::map<VertexId, std::uint64_t> vertex_delays;
    std::map<EdgeId, std::uint64_t> edge_delays;

    friend bool operator==(const Move&, const Move&) = default;
};

Partition partition_for(const MultiGraph& g, const Move& m);
DrinenVector delay_vector_for(const MultiGraph& g, const Move& m);

/// Throws PreconditionError if the move does not apply.
MultiGraph apply_move(const MultiGraph& g, const Move& m);

/// Text of one move: the `move` line plus any class / vertex / edge lines.
std::string format_move(const Move& m);

struct Step {
    Move move;
    MultiGraph result;
};

struct MoveSequence {
    std::vector<Step> steps;
};

/// A replayable script; each move is followed by a comment with the matrix it produces.
std::string format_sequence(const MoveSequence& seq);

/// Parses and applies a script to g, resolving vertex references (label or
/// index) against the current graph at each step. Syntax errors throw
/// ParseError; a move that does not apply throws PreconditionError prefixed
/// with its line number.
MoveSequence replay_script(const MultiGraph& g, std::string_view script);

/// Parses a single move (as produced by format_move) against graph g.
Move parse_move(const MultiGraph& g, std::string_view text);

}  // namespace lpaflow
