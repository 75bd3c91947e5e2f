#include "lpaflow/script.hpp"

#include "lpaflow/errors.hpp"
#include "text.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace lpaflow {

namespace {

struct KindName {
    MoveKind kind;
    const char* name;
};

constexpr std::array<KindName, 12> kKindNames{{
    {MoveKind::EliminateSource, "eliminate-source"},
    {MoveKind::Expand, "expand"},
    {MoveKind::Contract, "contract"},
    {MoveKind::InSplit, "in-split"},
    {MoveKind::OutSplit, "out-split"},
    {MoveKind::InAmalgamate, "in-amalgamate"},
    {MoveKind::OutAmalgamate, "out-amalgamate"},
    {MoveKind::Shift, "shift"},
    {MoveKind::Minus, "minus"},
    {MoveKind::Minus1, "minus1"},
    {MoveKind::OutDelay, "out-delay"},
    {MoveKind::InDelay, "in-delay"},
}};

bool is_split(MoveKind k) { return k == MoveKind::InSplit || k == MoveKind::OutSplit; }
bool is_delay(MoveKind k) { return k == MoveKind::InDelay || k == MoveKind::OutDelay; }
bool is_amalgamation(MoveKind k) { return k == MoveKind::InAmalgamate || k == MoveKind::OutAmalgamate; }

// Number of plain vertex arguments a move takes: {min, max}.
std::pair<std::size_t, std::size_t> vertex_arity(MoveKind k) {
    switch (k) {
        case MoveKind::EliminateSource:
        case MoveKind::Expand: return {1, 1};
        case MoveKind::Contract:
        case MoveKind::Shift: return {2, 2};
        case MoveKind::Minus:
        case MoveKind::Minus1: return {0, 1};
        default: return {0, 0};
    }
}

VertexId resolve_vertex(const MultiGraph& g, std::size_t line, const text::Token& tok) {
    if (auto v = g.find_vertex(tok.text)) return *v;
    throw ParseError(line, tok.column, "unknown vertex '" + std::string(tok.text) + "'");
}

// The `move` line and the data lines attached to it.
struct RawMove {
    const text::Line* head = nullptr;
    std::vector<const text::Line*> data;
};

std::vector<RawMove> group_lines(const std::vector<text::Line>& lines) {
    std::vector<RawMove> moves;
    for (const auto& line : lines) {
        const std::string_view word = line.tokens[0].text;
        if (word == "move") {
            moves.push_back({&line, {}});
        } else if (word == "class" || word == "vertex" || word == "edge") {
            if (moves.empty()) {
                throw ParseError(line.number, line.tokens[0].column,
                                 "'" + std::string(word) + "' line before any move line");
            }
            moves.back().data.push_back(&line);
        } else {
            throw ParseError(line.number, line.tokens[0].column,
                             "expected 'move', 'class', 'vertex' or 'edge', found '" + std::string(word) + "'");
        }
    }
    return moves;
}

void parse_class_line(const MultiGraph& g, const text::Line& line, Move& m,
                      std::map<VertexId, std::map<std::size_t, std::vector<EdgeId>>>& classes) {
    const std::size_t colon = line.body.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError(line.number, line.tokens.back().column, "class lines have the form 'class v i: e1,e2,...'");
    }
    const auto head = text::split(line.body.substr(0, colon), 1);
    if (head.size() != 3) {
        throw ParseError(line.number, head.empty() ? 1 : head.back().column,
                         "class lines have the form 'class v i: e1,e2,...'");
    }
    if (!is_split(m.kind)) {
        throw ParseError(line.number, head[0].column, std::string("'class' lines belong to splits, not ") + to_string(m.kind));
    }
    const VertexId v = resolve_vertex(g, line.number, head[1]);
    const auto index = text::parse_unsigned<std::size_t>(line.number, head[2], "a class index");
    if (index == 0) throw ParseError(line.number, head[2].column, "class indices start at 1");
    auto& target = classes[v][index];
    if (!target.empty()) throw ParseError(line.number, head[2].column, "class listed twice");
    const auto edges = text::split(line.body.substr(colon + 1), colon + 2, ",");
    if (edges.empty()) throw ParseError(line.number, colon + 1, "a class needs at least one edge");
    for (const auto& tok : edges) target.push_back(text::parse_unsigned<EdgeId>(line.number, tok, "an edge id"));
}

void parse_delay_line(const text::Line& line, Move& m) {
    const std::string_view word = line.tokens[0].text;
    if (!is_delay(m.kind)) {
        throw ParseError(line.number, line.tokens[0].column,
                         "'" + std::string(word) + "' lines belong to delays, not " + to_string(m.kind));
    }
    if (line.tokens.size() != 3) {
        throw ParseError(line.number, line.tokens[0].column, "delay lines have the form '" + std::string(word) + " id d'");
    }
    const auto id = text::parse_unsigned<std::size_t>(line.number, line.tokens[1], "an id");
    const auto d = text::parse_unsigned<std::uint64_t>(line.number, line.tokens[2], "a delay");
    auto& target = word == "vertex" ? m.vertex_delays : m.edge_delays;
    if (!target.emplace(id, d).second) throw ParseError(line.number, line.tokens[1].column, "delay given twice");
}

Move build_move(const MultiGraph& g, const RawMove& raw) {
    const text::Line& head = *raw.head;
    if (head.tokens.size() < 2) throw ParseError(head.number, head.tokens[0].column, "move line needs a move name");
    const auto kind = move_kind_from_string(head.tokens[1].text);
    if (!kind) {
        throw ParseError(head.number, head.tokens[1].column, "unknown move '" + std::string(head.tokens[1].text) + "'");
    }
    Move m;
    m.kind = *kind;
    const std::vector<text::Token> args(head.tokens.begin() + 2, head.tokens.end());
    if (is_amalgamation(m.kind)) {
        for (const auto& tok : args) {
            std::vector<VertexId> block;
            for (const auto& part : text::split(tok.text, tok.column, ",")) block.push_back(resolve_vertex(g, head.number, part));
            m.blocks.push_back(std::move(block));
        }
    } else {
        const auto [lo, hi] = vertex_arity(m.kind);
        if (args.size() < lo || args.size() > hi) {
            const std::size_t col = args.size() > hi ? args[hi].column : head.tokens[1].column;
            throw ParseError(head.number, col,
                             std::string(to_string(m.kind)) + " takes " +
                                 (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or " + std::to_string(hi)) +
                                 " vertex argument" + (hi == 1 ? "" : "s"));
        }
        for (const auto& tok : args) m.vertices.push_back(resolve_vertex(g, head.number, tok));
    }

    std::map<VertexId, std::map<std::size_t, std::vector<EdgeId>>> classes;
    for (const text::Line* line : raw.data) {
        if (line->tokens[0].text == "class") {
            parse_class_line(g, *line, m, classes);
        } else {
            parse_delay_line(*line, m);
        }
    }
    for (auto& [v, by_index] : classes) {
        std::size_t expected = 1;
        for (auto& [index, edges] : by_index) {
            if (index != expected) {
                throw ParseError(raw.data.front()->number, 1,
                                 "classes of vertex " + std::to_string(v) + " must be numbered 1.." +
                                     std::to_string(by_index.size()));
            }
            ++expected;
            m.classes[v].push_back(std::move(edges));
        }
    }
    return m;
}

std::string join(const std::vector<std::size_t>& ids, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? sep : "") + std::to_string(ids[i]);
    return out;
}

}  // namespace

const char* to_string(MoveKind kind) {
    for (const auto& kn : kKindNames) {
        if (kn.kind == kind) return kn.name;
    }
    return "?";
}

std::optional<MoveKind> move_kind_from_string(std::string_view name) {
    for (const auto& kn : kKindNames) {
        if (name == kn.name) return kn.kind;
    }
    return std::nullopt;
}

bool is_standard(MoveKind kind) {
    switch (kind) {
        case MoveKind::Expand:
        case MoveKind::Contract:
        case MoveKind::InSplit:
        case MoveKind::OutSplit:
        case MoveKind::InAmalgamate:
        case MoveKind::OutAmalgamate: return true;
        default: return false;
    }
}

Partition partition_for(const MultiGraph& g, const Move& m) {
    const Side side = m.kind == MoveKind::InSplit ? Side::In : Side::Out;
    Partition p = coarsest_partition(g, side);
    for (const auto& [v, classes] : m.classes) {
        if (v >= g.vertex_count()) {
            throw PreconditionError("split: vertex " + std::to_string(v) + " out of range");
        }
        p.classes[v] = classes;
    }
    return p;
}

DrinenVector delay_vector_for(const MultiGraph& g, const Move& m) {
    DrinenVector d = DrinenVector::zero(g);
    for (const auto& [e, value] : m.edge_delays) {
        if (e >= g.edge_count()) throw PreconditionError("delay: edge " + std::to_string(e) + " out of range");
        d.edge[e] = value;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto edges = m.kind == MoveKind::OutDelay ? g.out_edges(v) : g.in_edges(v);
        for (EdgeId e : edges) d.vertex[v] = std::max(d.vertex[v], d.edge[e]);
    }
    for (const auto& [v, value] : m.vertex_delays) {
        if (v >= g.vertex_count()) throw PreconditionError("delay: vertex " + std::to_string(v) + " out of range");
        d.vertex[v] = value;
    }
    return d;
}

MultiGraph apply_move(const MultiGraph& g, const Move& m) {
    const auto [lo, hi] = vertex_arity(m.kind);
    if (m.vertices.size() < lo || m.vertices.size() > hi) {
        throw PreconditionError(std::string(to_string(m.kind)) + ": wrong number of vertex arguments");
    }
    std::optional<VertexId> attach;
    if (!m.vertices.empty()) attach = m.vertices.front();
    switch (m.kind) {
        case MoveKind::EliminateSource: return eliminate_source(g, m.vertices[0]);
        case MoveKind::Expand: return expand(g, m.vertices[0]);
        case MoveKind::Contract: return contract(g, m.vertices[0], m.vertices[1]);
        case MoveKind::InSplit: return in_split(g, partition_for(g, m)).graph;
        case MoveKind::OutSplit: return out_split(g, partition_for(g, m)).graph;
        case MoveKind::InAmalgamate:
        case MoveKind::OutAmalgamate: {
            // Vertices outside every block stay on their own.
            auto blocks = m.blocks;
            std::vector<bool> listed(g.vertex_count(), false);
            for (const auto& block : blocks) {
                for (VertexId v : block) {
                    if (v < listed.size()) listed[v] = true;
                }
            }
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (!listed[v]) blocks.push_back({v});
            }
            return m.kind == MoveKind::InAmalgamate ? in_amalgamate(g, blocks).graph : out_amalgamate(g, blocks).graph;
        }
        case MoveKind::Shift: return shift(g, m.vertices[0], m.vertices[1]);
        case MoveKind::Minus: return minus(g, attach);
        case MoveKind::Minus1: return minus1(g, attach);
        case MoveKind::OutDelay: return out_delay(g, delay_vector_for(g, m));
        case MoveKind::InDelay: return in_delay(g, delay_vector_for(g, m));
    }
    throw PreconditionError("unknown move");
}

std::string format_move(const Move& m) {
    std::ostringstream out;
    out << "move " << to_string(m.kind);
    for (VertexId v : m.vertices) out << ' ' << v;
    for (const auto& block : m.blocks) out << ' ' << join(block, ",");
    out << '\n';
    for (const auto& [v, classes] : m.classes) {
        for (std::size_t i = 0; i < classes.size(); ++i) out << "class " << v << ' ' << i + 1 << ": " << join(classes[i], ",") << '\n';
    }
    for (const auto& [v, d] : m.vertex_delays) out << "vertex " << v << ' ' << d << '\n';
    for (const auto& [e, d] : m.edge_delays) out << "edge " << e << ' ' << d << '\n';
    return out.str();
}

std::string format_sequence(const MoveSequence& seq) {
    std::ostringstream out;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const Step& step = seq.steps[i];
        out << format_move(step.move);
        const IntMatrix a = incidence_matrix(step.result);
        out << "# step " << i + 1 << " gives matrix " << a.rows() << ':';
        for (std::size_t r = 0; r < a.rows(); ++r) {
            out << (r ? " |" : "");
            for (std::size_t c = 0; c < a.cols(); ++c) out << ' ' << a(r, c);
        }
        out << '\n';
    }
    return out.str();
}

MoveSequence replay_script(const MultiGraph& g, std::string_view script) {
    const auto lines = text::lines(script);
    const auto raw = group_lines(lines);
    MoveSequence seq;
    MultiGraph current = g;
    for (const RawMove& r : raw) {
        Move m = build_move(current, r);
        try {
            current = apply_move(current, m);
        } catch (const PreconditionError& e) {
            throw PreconditionError("line " + std::to_string(r.head->number) + ": " + e.what());
        }
        seq.steps.push_back({std::move(m), current});
    }
    return seq;
}

Move parse_move(const MultiGraph& g, std::string_view input) {
    const auto lines = text::lines(input);
    const auto raw = group_lines(lines);
    if (raw.size() != 1) throw ParseError(1, 1, "expected exactly one move, found " + std::to_string(raw.size()));
    return build_move(g, raw.front());
}

}  // namespace lpaflow
