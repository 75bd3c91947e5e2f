// lpaflow: flow-equivalence invariants, graph moves and classification
// verdicts for Leavitt path algebras of finite graphs.

#include "lpaflow/classify.hpp"
#include "lpaflow/errors.hpp"
#include "lpaflow/flowsearch.hpp"
#include "lpaflow/graph_io.hpp"
#include "lpaflow/invariants.hpp"
#include "lpaflow/random.hpp"
#include "lpaflow/script.hpp"
#include "lpaflow/selftest.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lpaflow;

namespace {

constexpr int kUsageError = 2;

MultiGraph load(const std::string& path) {
    try {
        return read_graph_file(path);
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void print_graph(const MultiGraph& g) {
    std::cout << "# vertices:";
    for (const auto& label : g.labels()) std::cout << ' ' << label;
    std::cout << '\n' << format_matrix(g);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const std::string& path, bool json) {
    const MultiGraph g = load(path);
    const GraphReport r = classify_graph(g);
    const std::pair<const char*, bool> flags[] = {
        {"has_sources", r.has_sources},
        {"has_sinks", r.has_sinks},
        {"irreducible", r.irreducible},
        {"essential", r.essential},
        {"trivial", r.trivial},
        {"every_cycle_has_exit", r.every_cycle_has_exit},
        {"every_vertex_reaches_cycle_or_sink", r.every_vertex_reaches_cycle_or_sink},
        {"has_cycle", r.has_cycle},
        {"simple_lpa", r.simple_lpa},
        {"purely_infinite_simple", r.purely_infinite_simple},
    };
    const auto cycle = exitless_cycle(g);
    if (json) {
        nlohmann::ordered_json j{{"schema", 1}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
        for (const auto& [name, value] : flags) j[name] = value;
        j["exitless_cycle"] = cycle ? nlohmann::ordered_json(*cycle) : nlohmann::ordered_json(nullptr);
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count() << '\n';
    for (const auto& [name, value] : flags) std::cout << name << ": " << yes_no(value) << '\n';
    if (cycle) {
        std::cout << "cycle without exit:";
        for (VertexId v : *cycle) std::cout << ' ' << g.label(v);
        std::cout << '\n';
    }
    return 0;
}

int cmd_invariants(const std::string& path) {
    const MultiGraph g = load(path);
    std::cout << to_json(franks_triple(g), classify_graph(g).purely_infinite_simple).dump() << '\n';
    return 0;
}

int cmd_move(const std::vector<std::string>& tokens, const std::vector<std::string>& classes,
             const std::vector<std::string>& vertex_delays, const std::vector<std::string>& edge_delays) {
    if (tokens.size() < 2) throw PreconditionError("usage: move <name> [args...] <graph>");
    const MultiGraph g = load(tokens.back());
    std::string script = "move";
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) script += " " + tokens[i];
    script += '\n';
    for (const auto& c : classes) script += "class " + c + '\n';
    for (const auto& d : vertex_delays) script += "vertex " + d + '\n';
    for (const auto& d : edge_delays) script += "edge " + d + '\n';
    Move m;
    try {
        m = parse_move(g, script);
    } catch (const ParseError& e) {
        throw Error("move arguments, " + std::string(e.what()));
    }
    print_graph(apply_move(g, m));
    return 0;
}

void print_verdict(const Verdict& v, bool json) {
    if (json) {
        std::cout << to_json(v).dump(2) << '\n';
        return;
    }
    std::cout << "verdict: " << v.summary() << "\nreason: " << v.tag << "\ndetail: " << v.text << '\n';
}

int cmd_classify(const std::string& a, const std::string& b, bool json) {
    print_verdict(decide(load(a), load(b)), json);
    return 0;
}

int cmd_transpose(const std::string& a, bool json) {
    print_verdict(decide_transpose(load(a)), json);
    return 0;
}

int cmd_search(const std::string& a, const std::string& b, const SearchOptions& options, bool json) {
    const MultiGraph src = load(a), dst = load(b);
    const SearchResult r = find_sequence(src, dst, options);
    const SearchStats& s = r.stats;
    if (json) {
        nlohmann::ordered_json steps = nlohmann::ordered_json::array();
        for (const Step& step : r.sequence.steps) {
            const IntMatrix m = incidence_matrix(step.result);
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
                rows.push_back(row);
            }
            steps.push_back({{"move", format_move(step.move)}, {"matrix", rows}});
        }
        nlohmann::ordered_json j{{"schema", 1},
                         {"status", to_string(r.status)},
                         {"steps", steps},
                         {"stats",
                          {{"forward_nodes", s.forward_nodes},
                           {"backward_nodes", s.backward_nodes},
                           {"expanded", s.expanded},
                           {"pruned_vertex_cap", s.pruned_vertex_cap},
                           {"pruned_entry_cap", s.pruned_entry_cap},
                           {"pruned_partition_cap", s.pruned_partition_cap},
                           {"node_cap_hit", s.node_cap_hit}}}};
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "# status: " << to_string(r.status);
    if (r.status == SearchStatus::Found) std::cout << " (" << r.sequence.steps.size() << " steps)";
    std::cout << "\n# nodes: " << s.forward_nodes << " forward, " << s.backward_nodes << " backward, " << s.expanded
              << " expanded\n# pruned: " << s.pruned_vertex_cap << " by vertex cap, " << s.pruned_entry_cap
              << " by entry cap, " << s.pruned_partition_cap << " partition enumerations cut"
              << (s.node_cap_hit ? ", node cap hit" : "") << '\n';
    std::cout << format_sequence(r.sequence);
    return 0;
}

int cmd_replay(const std::string& graph, const std::string& script) {
    const MultiGraph g = load(graph);
    MoveSequence seq;
    try {
        seq = replay_script(g, read_text(script));
    } catch (const ParseError& e) {
        throw Error(script + ": " + e.what());
    }
    print_graph(seq.steps.empty() ? g : seq.steps.back().result);
    return 0;
}

int cmd_sample(std::uint64_t seed, std::size_t vertices, unsigned max_entry) {
    std::mt19937_64 rng(seed);
    std::cout << format_matrix(random_irreducible_graph(rng, vertices, vertices, max_entry));
    return 0;
}

int cmd_selftest() {
    const auto cases = run_selftest();
    std::size_t passed = 0;
    for (const auto& c : cases) {
        if (c.passed) {
            ++passed;
            std::cout << "ok    " << c.name << '\n';
        } else {
            std::cout << "FAIL  " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
        }
    }
    std::cout << passed << "/" << cases.size() << " examples passed\n";
    return passed == cases.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flow-equivalence invariants and moves for Leavitt path algebras of finite graphs"};
    app.require_subcommand(1);
    std::uint64_t seed = kDefaultSeed;
    app.add_option("--seed", seed, "Seed for randomized commands")->capture_default_str();

    bool json = false;
    std::string a, b;

    auto* check = app.add_subcommand("check", "Structural predicates of a graph");
    check->add_option("graph", a)->required();
    check->add_flag("--json", json);

    auto* invariants = app.add_subcommand("invariants", "Franks triple as JSON");
    invariants->add_option("graph", a)->required();
    invariants->add_flag("--json", json, "Accepted for symmetry; output is always JSON");

    std::vector<std::string> move_tokens, classes, vertex_delays, edge_delays;
    auto* move = app.add_subcommand("move", "Apply one move: move <name> [args...] <graph>");
    move->add_option("tokens", move_tokens, "Move name, its arguments, then the graph file")->required();
    move->add_option("--class", classes, "Split class 'v i: e1,e2,...' (repeatable)");
    move->add_option("--vertex-delay", vertex_delays, "Delay 'v d' at a vertex (repeatable)");
    move->add_option("--edge-delay", edge_delays, "Delay 'e d' on an edge (repeatable)");

    auto* classify = app.add_subcommand("classify", "Compare the algebras of two graphs");
    classify->add_option("first", a)->required();
    classify->add_option("second", b)->required();
    classify->add_flag("--json", json);

    auto* transpose_cmd = app.add_subcommand("transpose", "Compare a graph's algebra with its transpose graph's");
    transpose_cmd->add_option("graph", a)->required();
    transpose_cmd->add_flag("--json", json);

    SearchOptions options;
    auto* search = app.add_subcommand("search", "Look for a sequence of standard moves between two graphs");
    search->add_option("source", a)->required();
    search->add_option("target", b)->required();
    search->add_option("--depth", options.max_depth, "Maximum number of moves")->capture_default_str();
    search->add_option("--max-vertices", options.max_vertices, "Largest intermediate graph")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{1}, kMaxIsomorphismVertices));
    search->add_option("--max-entry", options.max_entry, "Largest matrix entry of an intermediate graph")
        ->capture_default_str();
    search->add_option("--max-nodes", options.max_nodes, "Node budget")->capture_default_str();
    search->add_flag("--json", json);

    auto* replay = app.add_subcommand("replay", "Apply a move script to a graph and print the result");
    replay->add_option("graph", a)->required();
    replay->add_option("script", b)->required();

    std::size_t sample_vertices = 3;
    unsigned sample_entry = 2;
    auto* sample = app.add_subcommand("sample", "Print a random irreducible nontrivial graph");
    sample->add_option("--vertices", sample_vertices)->capture_default_str()->check(CLI::Range(1, 64));
    sample->add_option("--max-entry", sample_entry)->capture_default_str()->check(CLI::Range(1, 1000));

    auto* selftest = app.add_subcommand("selftest", "Replay the built-in reference examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*check) return cmd_check(a, json);
        if (*invariants) return cmd_invariants(a);
        if (*move) return cmd_move(move_tokens, classes, vertex_delays, edge_delays);
        if (*classify) return cmd_classify(a, b, json);
        if (*transpose_cmd) return cmd_transpose(a, json);
        if (*search) return cmd_search(a, b, options, json);
        if (*replay) return cmd_replay(a, b);
        if (*sample) return cmd_sample(seed, sample_vertices, sample_entry);
        if (*selftest) return cmd_selftest();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return kUsageError;
}
