#include "doctest.h"

#include "lpaflow/errors.hpp"
#include "lpaflow/exactla.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/seed.hpp"

using namespace lpaflow;

namespace {

Integer abs_det(const IntMatrix& m) { return abs(det(m)); }

}  // namespace

TEST_CASE("determinant examples") {
    CHECK(det(IntMatrix{{-3}}) == -3);
    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(IntMatrix{{0, -3}, {-1, -1}}) == -3);
    CHECK(det(IntMatrix(0, 0)) == 1);
    CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det(IntMatrix{{2, 4}, {1, 2}}) == 0);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), PreconditionError);
}

TEST_CASE("determinant agrees with the permutation expansion") {
    auto rng = testsupport::rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const IntMatrix a = testsupport::random_matrix(rng, n, n, -9, 9);
        REQUIRE(det(a) == testsupport::leibniz_det(a));
        REQUIRE(det(a) == det(a.transposed()));
    }
}

TEST_CASE("determinants of large entries stay exact") {
    IntMatrix a{{1, 0}, {0, 1}};
    a(0, 0) = Integer("1000000000000000000000");
    a(1, 1) = Integer("1000000000000000000000");
    a(0, 1) = 1;
    a(1, 0) = 1;
    CHECK(det(a) == Integer("999999999999999999999999999999999999999999"));
}

TEST_CASE("Smith normal form examples") {
    const auto id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.diagonal == IntMatrix::identity(3));

    const IntMatrix f{{0, -3}, {-1, -1}};
    const auto s = smith_normal_form(f);
    CHECK(s.diagonal == IntMatrix{{1, 0}, {0, 3}});
    CHECK(s.left * f * s.right == s.diagonal);

    const auto z = smith_normal_form(IntMatrix(2, 2));
    CHECK(z.diagonal.is_zero());

    const auto rect = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}});
    CHECK(rect.diagonal_entries() == IntVector{Integer(2), Integer(6)});
}

TEST_CASE("Smith normal form contract on random matrices") {
    auto rng = testsupport::rng(2);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t rows = 1 + trial % 6;
        const std::size_t cols = trial % 3 == 0 ? 1 + (trial / 3) % 6 : rows;
        const IntMatrix a = testsupport::random_matrix(rng, rows, cols, -9, 9);
        const auto s = smith_normal_form(a);
        REQUIRE(s.left * a * s.right == s.diagonal);
        REQUIRE(abs_det(s.left) == 1);
        REQUIRE(abs_det(s.right) == 1);
        REQUIRE(s.left * s.left_inverse == IntMatrix::identity(rows));
        REQUIRE(s.diagonal.is_diagonal());
        const IntVector d = s.diagonal_entries();
        for (std::size_t i = 0; i < d.size(); ++i) {
            REQUIRE(d[i] >= 0);
            if (i + 1 < d.size()) {
                // d_i | d_(i+1), zeros last
                if (d[i] == 0) {
                    REQUIRE(d[i + 1] == 0);
                } else {
                    REQUIRE(d[i + 1] % d[i] == 0);
                }
            }
        }
        if (rows <= 5 && cols <= 5) REQUIRE(d == testsupport::smith_by_minors(a));
        if (rows == cols) {
            Integer product = 1;
            for (const auto& x : d) product *= x;
            REQUIRE(product == abs_det(a));
        }
    }
}

TEST_CASE("Smith normal form is deterministic") {
    auto rng = testsupport::rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const IntMatrix a = testsupport::random_matrix(rng, 4, 4, -9, 9);
        const auto s1 = smith_normal_form(a);
        const auto s2 = smith_normal_form(a);
        REQUIRE(s1.left == s2.left);
        REQUIRE(s1.right == s2.right);
    }
}

TEST_CASE("abelian group validation and printing") {
    CHECK_THROWS_AS(AbelianGroup({Integer(1)}, 0), PreconditionError);
    CHECK_THROWS_AS(AbelianGroup({Integer(0)}, 0), PreconditionError);
    CHECK_THROWS_AS(AbelianGroup({Integer(4), Integer(2)}, 0), PreconditionError);
    CHECK_THROWS_AS(AbelianGroup({Integer(2), Integer(3)}, 0), PreconditionError);
    const AbelianGroup g({Integer(2), Integer(4)}, 1);
    CHECK(g.to_string() == "Z/2 + Z/4 + Z^1");
    CHECK(g.torsion_order() == 8);
    CHECK_FALSE(g.is_finite());
    CHECK(AbelianGroup().to_string() == "0");
    CHECK(AbelianGroup().is_trivial());
}

TEST_CASE("cokernel examples") {
    const Cokernel c3 = cokernel(IntMatrix{{-3}});
    CHECK(c3.group == AbelianGroup({Integer(3)}, 0));
    const IntVector one{Integer(1)};
    CHECK(c3.projection(one) == IntVector{Integer(1)});

    CHECK(cokernel(IntMatrix{{0, -1}, {-1, 0}}).group.is_trivial());

    const Cokernel free = cokernel(IntMatrix(3, 3));
    CHECK(free.group == AbelianGroup({}, 3));
    const IntVector x{Integer(5), Integer(-2), Integer(7)};
    CHECK(free.projection(x) == x);

    CHECK_THROWS_AS(cokernel(IntMatrix(2, 3)), PreconditionError);
}

TEST_CASE("cokernel projection is a homomorphism killing the image") {
    auto rng = testsupport::rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const IntMatrix a = testsupport::random_matrix(rng, n, n, -4, 4);
        const Cokernel c = cokernel(a);
        const auto& torsion = c.group.torsion();
        // Columns of a map to zero.
        for (std::size_t j = 0; j < n; ++j) {
            const IntVector image = c.projection(a.column(j));
            for (const auto& v : image) REQUIRE(v == 0);
        }
        // proj(x + y) = proj(x) + proj(y) in the group.
        const IntMatrix xy = testsupport::random_matrix(rng, n, 2, -20, 20);
        const IntVector x = xy.column(0), y = xy.column(1);
        IntVector sum(n);
        for (std::size_t i = 0; i < n; ++i) sum[i] = x[i] + y[i];
        const IntVector px = c.projection(x), py = c.projection(y), ps = c.projection(sum);
        REQUIRE(px.size() == c.group.coordinate_count());
        for (std::size_t i = 0; i < ps.size(); ++i) {
            Integer expected = px[i] + py[i];
            if (i < torsion.size()) {
                REQUIRE(px[i] >= 0);
                REQUIRE(px[i] < torsion[i]);
                expected %= torsion[i];
            }
            REQUIRE(ps[i] == expected);
        }
    }
}

TEST_CASE("cokernels of a matrix and its transpose are isomorphic") {
    auto rng = testsupport::rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const IntMatrix a = testsupport::random_matrix(rng, n, n, -9, 9);
        const AbelianGroup g = cokernel(a).group, h = cokernel(a.transposed()).group;
        REQUIRE(group_iso(g, h));
        // Isomorphic cokernels force equal |det|.
        REQUIRE(abs_det(a) == abs_det(a.transposed()));
        if (g.is_finite()) {
            REQUIRE(g.torsion_order() == abs_det(a));
        } else {
            REQUIRE(det(a) == 0);
        }
    }
}

TEST_CASE("group isomorphism compares invariant factors") {
    CHECK(group_iso(AbelianGroup({Integer(3)}, 0), AbelianGroup({Integer(3)}, 0)));
    CHECK_FALSE(group_iso(AbelianGroup({Integer(2), Integer(4)}, 0), AbelianGroup({Integer(8)}, 0)));
    CHECK_FALSE(group_iso(AbelianGroup({}, 1), AbelianGroup({}, 2)));
}

TEST_CASE("column span membership") {
    const IntMatrix a{{2, 0}, {0, 3}};
    CHECK(in_column_span(a, IntVector{Integer(4), Integer(-3)}));
    CHECK_FALSE(in_column_span(a, IntVector{Integer(1), Integer(0)}));
    CHECK(in_column_span(IntMatrix(2, 2), IntVector{Integer(0), Integer(0)}));
    CHECK_FALSE(in_column_span(IntMatrix(2, 2), IntVector{Integer(0), Integer(1)}));
    CHECK(in_column_span(IntMatrix{{1, 1}, {1, 1}}, IntVector{Integer(5), Integer(5)}));
    CHECK_FALSE(in_column_span(IntMatrix{{1, 1}, {1, 1}}, IntVector{Integer(5), Integer(4)}));
}
