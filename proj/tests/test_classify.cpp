#include "doctest.h"

#include "lpaflow/classify.hpp"
#include "lpaflow/moves.hpp"
#include "lpaflow/random.hpp"
#include "lpaflow/script.hpp"
#include "support/generators.hpp"
#include "support/seed.hpp"

using namespace lpaflow;

namespace {

MultiGraph graph(std::initializer_list<std::initializer_list<long>> rows) { return MultiGraph::from_matrix(IntMatrix(rows)); }

const MultiGraph kRose4 = graph({{4}});
const MultiGraph kF = graph({{1, 1}, {3, 2}});
const MultiGraph kTwo = graph({{1, 1}, {1, 1}});
const MultiGraph kTwoMinus = graph({{1, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 1, 1}, {0, 0, 1, 1}});
const MultiGraph kE3 = graph({{1, 1, 1}, {0, 0, 1}, {1, 0, 0}});

using Levels = std::vector<Level>;

}  // namespace

TEST_CASE("reference verdicts") {
    const Verdict iso = decide(kRose4, kF);
    CHECK(iso.levels == Levels{Level::MoritaEquivalent, Level::Isomorphic});
    CHECK(iso.tag == "franks-triple-equivalent");
    CHECK(iso.summary() == "MoritaEquivalent + Isomorphic");

    const Verdict gap = decide(kTwo, kTwoMinus);
    CHECK(gap.levels == Levels{Level::Unknown});
    CHECK(gap.tag == "determinant-sign-gap");
    CHECK(gap.left.determinant == -1);
    CHECK(gap.right.determinant == 1);

    const Verdict t = decide(kE3, transpose(kE3));
    CHECK(t.levels == Levels{Level::MoritaEquivalent, Level::NotIsomorphic});
    CHECK(t.tag == "unit-class-obstruction");
    CHECK(decide_transpose(kE3).levels == Levels{Level::MoritaEquivalent, Level::NotIsomorphic});

    const Verdict mismatch = decide(kRose4, kTwo);
    CHECK(mismatch.levels == Levels{Level::NotMoritaEquivalent});
    CHECK(mismatch.tag == "k0-group-mismatch");
    CHECK_FALSE(mismatch.has(Level::Isomorphic));
}

TEST_CASE("inputs outside the hypotheses") {
    const Verdict v = decide(graph({{1}}), kRose4);
    CHECK(v.levels == Levels{Level::Unknown});
    CHECK(v.tag == "hypotheses-unmet");
    CHECK_FALSE(v.left_pis);
    CHECK(v.right_pis);
    CHECK(v.text.find("first") != std::string::npos);
    CHECK(decide(kRose4, graph({{0, 1}, {0, 0}})).tag == "hypotheses-unmet");

    // Purely infinite simple with a source: fine for decide, not for the transpose comparison.
    const MultiGraph tail = graph({{0, 1}, {0, 2}});
    CHECK(decide(tail, tail).tag == "franks-triple-equivalent");
    CHECK(decide_transpose(tail).tag == "hypotheses-unmet");
    CHECK(decide_transpose(graph({{1}})).tag == "hypotheses-unmet");
}

TEST_CASE("sign gap with inequivalent units also rules out isomorphism") {
    // E3 has (Z/2, 1, det -2); minus of its transpose keeps (Z/2, 0) and flips the sign.
    const MultiGraph other = minus(transpose(kE3));
    const Verdict v = decide(kE3, other);
    CHECK(v.tag == "determinant-sign-gap");
    CHECK(v.levels == Levels{Level::NotIsomorphic, Level::Unknown});
}

TEST_CASE("the pointed comparison cap surfaces as its own tag") {
    // Z/8 + Z with unit (4, -2): the free part has 2-adic valuation 1 < 3, so
    // the comparison enumerates a coset of 4Z/8, more than a bound of one allows.
    const MultiGraph g = graph({{0, 3, 0, 3}, {0, 3, 5, 0}, {6, 6, 1, 6}, {4, 4, 0, 5}});
    const FranksTriple t = franks_triple(g);
    REQUIRE(t.pointed.group() == AbelianGroup({Integer(8)}, 1));
    PointedOptions tiny;
    tiny.max_coset_size = 1;
    const Verdict v = decide(g, g, tiny);
    CHECK(v.tag == "pointed-decision-cap");
    CHECK(v.levels == Levels{Level::MoritaEquivalent, Level::Unknown});
    CHECK(decide(g, g).tag == "franks-triple-equivalent");
}

TEST_CASE("verdicts are symmetric and reflexive") {
    auto rng = testsupport::rng(62);
    for (int trial = 0; trial < 300; ++trial) {
        const MultiGraph a = random_irreducible_graph(rng, 1, 4, 2);
        const MultiGraph b = random_irreducible_graph(rng, 1, 4, 2);
        const Verdict ab = decide(a, b), ba = decide(b, a);
        REQUIRE(ab.levels == ba.levels);
        REQUIRE(ab.tag == ba.tag);
        const Verdict aa = decide(a, a);
        REQUIRE(aa.levels == Levels{Level::MoritaEquivalent, Level::Isomorphic});
        // Isomorphic always comes with Morita equivalence.
        if (ab.has(Level::Isomorphic)) REQUIRE(ab.has(Level::MoritaEquivalent));
        REQUIRE_FALSE((ab.has(Level::Isomorphic) && ab.has(Level::NotIsomorphic)));
        REQUIRE_FALSE((ab.has(Level::MoritaEquivalent) && ab.has(Level::NotMoritaEquivalent)));
    }
}

TEST_CASE("standard moves never separate graphs") {
    auto rng = testsupport::rng(63);
    for (int trial = 0; trial < 200; ++trial) {
        const MultiGraph a = random_irreducible_graph(rng, 1, 4, 2);
        const MultiGraph b = apply_move(a, testsupport::random_standard_move(rng, a, 6));
        const Verdict v = decide(a, b);
        REQUIRE(v.has(Level::MoritaEquivalent));
        REQUIRE(v.tag != "determinant-sign-gap");
        REQUIRE(v.tag != "k0-group-mismatch");
    }
}

TEST_CASE("the sign gadget lands in the gap exactly when the determinant is nonzero") {
    auto rng = testsupport::rng(64);
    for (int trial = 0; trial < 200; ++trial) {
        const MultiGraph a = random_irreducible_graph(rng, 1, 4, 2);
        const Verdict v = decide(a, minus1(a));
        if (v.left.determinant == 0) {
            REQUIRE(v.tag == "franks-triple-equivalent");
        } else {
            REQUIRE(v.tag == "determinant-sign-gap");
            REQUIRE(v.levels == Levels{Level::Unknown});
        }
    }
}

TEST_CASE("verdict JSON") {
    const auto j = to_json(decide(kRose4, kF));
    CHECK(j["schema"] == 1);
    CHECK(j["levels"] == nlohmann::ordered_json::array({"MoritaEquivalent", "Isomorphic"}));
    CHECK(j["tag"] == "franks-triple-equivalent");
    CHECK(j["left"]["det"] == -3);
    CHECK(j["right"]["pis"] == true);
    CHECK(j.begin().key() == "schema");
}
