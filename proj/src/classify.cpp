#include "lpaflow/classify.hpp"

#include <algorithm>

namespace lpaflow {

namespace {

Verdict make(std::vector<Level> levels, const char* tag, std::string text, const FranksTriple& a,
             const FranksTriple& b) {
    std::sort(levels.begin(), levels.end());
    return {std::move(levels), tag, std::move(text), a, b};
}

std::string describe(const FranksTriple& t) {
    return "(" + t.pointed.to_string() + ", det " + t.determinant.get_str() + ")";
}

// Both inputs are known to satisfy the hypotheses; `morita_known` is set when
// the algebras are Morita equivalent for structural reasons already.
Verdict compare(const FranksTriple& a, const FranksTriple& b, const PointedOptions& options, bool morita_known) {
    const std::string data = describe(a) + " vs " + describe(b);
    if (!group_iso(a.pointed.group(), b.pointed.group())) {
        return make({Level::NotMoritaEquivalent}, "k0-group-mismatch",
                    "Grothendieck groups are not isomorphic: " + data, a, b);
    }
    const Decision pointed = equiv_unitary_pair(a, b, options);
    if (a.determinant != b.determinant && !morita_known) {
        std::vector<Level> levels{Level::Unknown};
        std::string text = "isomorphic groups with determinants of opposite sign; no theorem decides this case: " + data;
        if (pointed == Decision::No) {
            levels.push_back(Level::NotIsomorphic);
            text += "; unit classes are inequivalent, so the algebras are not isomorphic";
        }
        return make(levels, "determinant-sign-gap", text, a, b);
    }
    switch (pointed) {
        case Decision::Yes:
            return make({Level::MoritaEquivalent, Level::Isomorphic}, "franks-triple-equivalent",
                        "group, unit class and determinant agree: " + data, a, b);
        case Decision::No:
            return make({Level::MoritaEquivalent, Level::NotIsomorphic}, "unit-class-obstruction",
                        "same group and determinant but no isomorphism matches the unit classes: " + data, a, b);
        case Decision::Unknown:
            break;
    }
    return make({Level::MoritaEquivalent, Level::Unknown}, "pointed-decision-cap",
                "Morita equivalent; comparing unit classes exceeded the search bound: " + data, a, b);
}

}  // namespace

const char* to_string(Level level) {
    switch (level) {
        case Level::MoritaEquivalent: return "MoritaEquivalent";
        case Level::Isomorphic: return "Isomorphic";
        case Level::NotMoritaEquivalent: return "NotMoritaEquivalent";
        case Level::NotIsomorphic: return "NotIsomorphic";
        case Level::Unknown: return "Unknown";
    }
    return "?";
}

bool Verdict::has(Level level) const { return std::find(levels.begin(), levels.end(), level) != levels.end(); }

std::string Verdict::summary() const {
    std::string out;
    for (Level l : levels) out += (out.empty() ? "" : " + ") + std::string(to_string(l));
    return out;
}

Verdict decide(const MultiGraph& e, const MultiGraph& f, const PointedOptions& options) {
    const FranksTriple a = franks_triple(e);
    const FranksTriple b = franks_triple(f);
    const bool e_ok = classify_graph(e).purely_infinite_simple;
    const bool f_ok = classify_graph(f).purely_infinite_simple;
    Verdict v;
    if (!e_ok || !f_ok) {
        std::string which = !e_ok && !f_ok ? "neither graph is" : (!e_ok ? "the first graph is not" : "the second graph is not");
        v = make({Level::Unknown}, "hypotheses-unmet", which + " purely infinite simple; invariants are reported only",
                 a, b);
    } else {
        v = compare(a, b, options, false);
    }
    v.left_pis = e_ok;
    v.right_pis = f_ok;
    return v;
}

Verdict decide_transpose(const MultiGraph& g, const PointedOptions& options) {
    const MultiGraph t = transpose(g);
    const FranksTriple a = franks_triple(g);
    const FranksTriple b = franks_triple(t);
    const GraphReport report = classify_graph(g);
    Verdict v;
    if (!report.purely_infinite_simple || report.has_sources) {
        v = make({Level::Unknown}, "hypotheses-unmet",
                 report.purely_infinite_simple ? "the graph has sources" : "the graph is not purely infinite simple", a,
                 b);
    } else {
        v = compare(a, b, options, true);
    }
    v.left_pis = report.purely_infinite_simple;
    v.right_pis = classify_graph(t).purely_infinite_simple;
    return v;
}

nlohmann::ordered_json to_json(const Verdict& v) {
    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    for (Level l : v.levels) levels.push_back(to_string(l));
    return {{"schema", 1},
            {"levels", levels},
            {"tag", v.tag},
            {"text", v.text},
            {"left", to_json(v.left, v.left_pis)},
            {"right", to_json(v.right, v.right_pis)}};
}

}  // namespace lpaflow
