#include "doctest.h"

#include "lpaflow/exactla.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/seed.hpp"

#include <functional>
#include <numeric>

using namespace lpaflow;

namespace {

PointedGroup pointed(std::vector<long> torsion, std::size_t free_rank, std::vector<long> point) {
    IntVector t, p;
    for (long d : torsion) t.emplace_back(d);
    for (long x : point) p.emplace_back(x);
    return PointedGroup(AbelianGroup(t, free_rank), p);
}

// Invariant factor lists with product at most `limit`.
void factor_chains(std::uint64_t limit, std::vector<std::uint64_t>& prefix,
                   std::vector<std::vector<std::uint64_t>>& out) {
    std::uint64_t product = 1;
    for (auto d : prefix) product *= d;
    if (!prefix.empty()) out.push_back(prefix);
    const std::uint64_t start = prefix.empty() ? 2 : prefix.back();
    for (std::uint64_t d = start; product * d <= limit; d += prefix.empty() ? 1 : prefix.back()) {
        if (!prefix.empty() && d % prefix.back() != 0) continue;
        prefix.push_back(d);
        factor_chains(limit, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

TEST_CASE("pointed group examples") {
    CHECK(pointed_equivalent(pointed({2}, 0, {1}), pointed({2}, 0, {0})) == Decision::No);
    CHECK(pointed_equivalent(pointed({3}, 0, {1}), pointed({3}, 0, {2})) == Decision::Yes);
    CHECK(pointed_equivalent(PointedGroup(), PointedGroup()) == Decision::Yes);
    CHECK(pointed_equivalent(pointed({3}, 0, {1}), pointed({9}, 0, {1})) == Decision::No);
    CHECK(pointed_equivalent(pointed({}, 1, {2}), pointed({}, 1, {-2})) == Decision::Yes);
    CHECK(pointed_equivalent(pointed({}, 1, {2}), pointed({}, 1, {3})) == Decision::No);
    CHECK(pointed_equivalent(pointed({}, 2, {4, 6}), pointed({}, 2, {2, 0})) == Decision::Yes);
}

TEST_CASE("points are reduced into their residue range") {
    const PointedGroup p = pointed({5}, 1, {-1, -7});
    CHECK(p.point() == IntVector{Integer(4), Integer(-7)});
}

TEST_CASE("cyclic groups: equivalent iff gcd with the order agrees (exhaustive, d <= 64)") {
    for (std::uint64_t d = 2; d <= 64; ++d) {
        const auto orbit = testsupport::FiniteGroup({d}).automorphism_orbits();
        for (std::uint64_t x = 0; x < d; ++x) {
            for (std::uint64_t y = 0; y < d; ++y) {
                const bool same_orbit = orbit[x] == orbit[y];
                REQUIRE(same_orbit == (std::gcd(x, d) == std::gcd(y, d)));
                const Decision got = pointed_equivalent(pointed({long(d)}, 0, {long(x)}), pointed({long(d)}, 0, {long(y)}));
                REQUIRE(got == (same_orbit ? Decision::Yes : Decision::No));
            }
        }
    }
}

TEST_CASE("finite groups of order <= 64 agree with exhaustive automorphism orbits") {
    std::vector<std::uint64_t> prefix;
    std::vector<std::vector<std::uint64_t>> chains;
    factor_chains(64, prefix, chains);
    std::size_t groups_checked = 0;
    for (const auto& chain : chains) {
        if (chain.size() < 2) continue;  // cyclic groups are covered above
        const testsupport::FiniteGroup g(chain);
        if (g.endomorphism_candidates() > 3'000'000) continue;
        ++groups_checked;
        const auto orbit = g.automorphism_orbits();
        IntVector factors;
        for (auto d : chain) factors.emplace_back(static_cast<unsigned long>(d));
        const AbelianGroup group(factors, 0);
        auto as_point = [&](std::size_t e) {
            IntVector p;
            for (auto x : g.element(e)) p.emplace_back(static_cast<unsigned long>(x));
            return PointedGroup(group, p);
        };
        for (std::size_t x = 0; x < g.order(); ++x) {
            for (std::size_t y = 0; y < g.order(); ++y) {
                const Decision got = pointed_equivalent(as_point(x), as_point(y));
                INFO(group.to_string(), " x=", x, " y=", y);
                REQUIRE(got == (orbit[x] == orbit[y] ? Decision::Yes : Decision::No));
            }
        }
    }
    CHECK(groups_checked >= 20);
}

TEST_CASE("free part: (t, z) ~ (t', z') via Aut(T + Z) by enumeration") {
    // Automorphisms of T + Z send (t, z) to (phi(t) + z c, +-z), phi in Aut(T), c in T.
    const std::vector<std::vector<std::uint64_t>> chains{{2}, {4}, {6}, {2, 2}, {2, 4}, {12}, {3, 3}};
    for (const auto& chain : chains) {
        const testsupport::FiniteGroup t(chain);
        const auto orbit = t.automorphism_orbits();
        IntVector factors;
        for (auto d : chain) factors.emplace_back(static_cast<unsigned long>(d));
        const AbelianGroup group(factors, 1);
        for (long z = -4; z <= 4; ++z) {
            for (long z2 = -4; z2 <= 4; ++z2) {
                for (std::size_t x = 0; x < t.order(); ++x) {
                    for (std::size_t y = 0; y < t.order(); ++y) {
                        bool expected = false;
                        if (std::labs(z) == std::labs(z2)) {
                            // Is y in the orbit of x shifted by some multiple z*c?
                            for (std::size_t c = 0; c < t.order() && !expected; ++c) {
                                auto xe = t.element(x), ce = t.element(c);
                                std::vector<std::uint64_t> shifted(chain.size());
                                for (std::size_t i = 0; i < chain.size(); ++i) {
                                    const long v = static_cast<long>(xe[i]) + z * static_cast<long>(ce[i]);
                                    const long d = static_cast<long>(chain[i]);
                                    shifted[i] = static_cast<std::uint64_t>(((v % d) + d) % d);
                                }
                                expected = orbit[t.index(shifted)] == orbit[y];
                            }
                        }
                        IntVector px, py;
                        for (auto v : t.element(x)) px.emplace_back(static_cast<unsigned long>(v));
                        for (auto v : t.element(y)) py.emplace_back(static_cast<unsigned long>(v));
                        px.emplace_back(z);
                        py.emplace_back(z2);
                        const Decision got = pointed_equivalent(PointedGroup(group, px), PointedGroup(group, py));
                        INFO(group.to_string(), " x=", x, " z=", z, " y=", y, " z2=", z2);
                        REQUIRE(got == (expected ? Decision::Yes : Decision::No));
                    }
                }
            }
        }
    }
}

TEST_CASE("random automorphic images are recognised, including free rank 2 and 3") {
    auto rng = testsupport::rng(11);
    const std::vector<std::pair<std::vector<long>, std::size_t>> shapes{
        {{2}, 2}, {{2, 4}, 2}, {{3, 9}, 1}, {{6}, 3}, {{5, 25}, 2}, {{2, 2, 2}, 1}, {{}, 3}, {{4, 8, 16}, 0}};
    for (const auto& [torsion, rank] : shapes) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<long> point;
            for (long d : torsion) point.push_back(std::uniform_int_distribution<long>(0, d - 1)(rng));
            for (std::size_t i = 0; i < rank; ++i) point.push_back(std::uniform_int_distribution<long>(-12, 12)(rng));
            const PointedGroup p = pointed(torsion, rank, point);
            const PointedGroup q = testsupport::random_automorphic_image(rng, p);
            INFO(p.to_string(), " vs ", q.to_string());
            REQUIRE(pointed_equivalent(p, q) == Decision::Yes);
            REQUIRE(pointed_equivalent(q, p) == Decision::Yes);
        }
    }
}

TEST_CASE("reflexive and symmetric on random points") {
    auto rng = testsupport::rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const long d1 = std::uniform_int_distribution<long>(2, 6)(rng);
        const long d2 = d1 * std::uniform_int_distribution<long>(1, 4)(rng);
        const std::size_t rank = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
        auto random_point = [&] {
            std::vector<long> p{std::uniform_int_distribution<long>(0, d1 - 1)(rng),
                                std::uniform_int_distribution<long>(0, d2 - 1)(rng)};
            for (std::size_t i = 0; i < rank; ++i) p.push_back(std::uniform_int_distribution<long>(-6, 6)(rng));
            return pointed({d1, d2}, rank, p);
        };
        const PointedGroup p = random_point(), q = random_point();
        REQUIRE(pointed_equivalent(p, p) == Decision::Yes);
        REQUIRE(pointed_equivalent(p, q) == pointed_equivalent(q, p));
    }
}

TEST_CASE("different groups are never equivalent") {
    CHECK(pointed_equivalent(pointed({2}, 0, {0}), pointed({2}, 1, {0, 0})) == Decision::No);
    CHECK(pointed_equivalent(pointed({2, 2}, 0, {0, 0}), pointed({4}, 0, {0})) == Decision::No);
}

TEST_CASE("large cosets are reported as unknown") {
    // Free coordinate 2 leaves the coset t + 2T (8 elements) of Z/4 + Z/8 to scan.
    PointedOptions tight;
    tight.max_coset_size = 1;
    const PointedGroup p = pointed({4, 8}, 1, {1, 2, 2});
    const PointedGroup q = pointed({4, 8}, 1, {1, 6, 2});
    CHECK(pointed_equivalent(p, q, tight) == Decision::Unknown);
    CHECK(pointed_equivalent(p, q) == Decision::Yes);
}
