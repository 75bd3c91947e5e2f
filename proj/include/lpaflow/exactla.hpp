#pragma once

#include "lpaflow/int_matrix.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lpaflow {

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws PreconditionError for non-square input. The empty matrix has determinant 1.
Integer det(const IntMatrix& a);

/// U * A * V = S with U, V unimodular and S diagonal, non-negative, each
/// diagonal entry dividing the next, zeros last.
///
/// Pivoting always takes the nonzero entry of least absolute value in the
/// active submatrix (ties broken by row, then column), so the output is a
/// deterministic function of the input. `left_inverse` is U^-1, kept so that
/// callers can map cokernel coordinates back to vectors.
struct SmithDecomposition {
    IntMatrix left;
    IntMatrix diagonal;
    IntMatrix right;
    IntMatrix left_inverse;

    // The min(rows, cols) diagonal entries of S.
    IntVector diagonal_entries() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Finitely generated abelian group Z_{d1} + ... + Z_{dk} + Z^r with
/// 2 <= d1 | d2 | ... | dk.
class AbelianGroup {
public:
    AbelianGroup() = default;
    AbelianGroup(IntVector torsion, std::size_t free_rank);

    const IntVector& torsion() const noexcept { return torsion_; }
    std::size_t free_rank() const noexcept { return free_rank_; }
    std::size_t coordinate_count() const noexcept { return torsion_.size() + free_rank_; }

    bool is_trivial() const noexcept { return torsion_.empty() && free_rank_ == 0; }
    bool is_finite() const noexcept { return free_rank_ == 0; }
    // Product of the torsion factors (the group order when finite).
    Integer torsion_order() const;

    // e.g. "Z/2 + Z/4 + Z^1", or "0" for the trivial group.
    std::string to_string() const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b);

private:
    IntVector torsion_;
    std::size_t free_rank_ = 0;
};

/// A group with a distinguished element, in the group's invariant-factor
/// coordinates: one residue per torsion factor, then one integer per free
/// generator. Residues are stored reduced into [0, d).
class PointedGroup {
public:
    PointedGroup() = default;
    PointedGroup(AbelianGroup group, IntVector point);

    const AbelianGroup& group() const noexcept { return group_; }
    const IntVector& point() const noexcept { return point_; }

    std::string to_string() const;

private:
    AbelianGroup group_;
    IntVector point_;
};

/// Maps integer vectors to their class in Z^n / A Z^n, expressed in the
/// coordinates of the cokernel's AbelianGroup.
class CokernelProjection {
public:
    CokernelProjection() = default;
    CokernelProjection(IntMatrix left, IntVector factors);

    IntVector operator()(std::span<const Integer> x) const;

private:
    IntMatrix left_;
    IntVector factors_;  // full SNF diagonal, one entry per row of left_
};

struct Cokernel {
    AbelianGroup group;
    CokernelProjection projection;
};

/// Z^n / A Z^n for a square integer matrix A acting on column vectors.
Cokernel cokernel(const IntMatrix& a);

/// True iff y lies in the lattice spanned by the columns of a.
bool in_column_span(const IntMatrix& a, std::span<const Integer> y);

bool group_iso(const AbelianGroup& g, const AbelianGroup& h);

enum class Decision { Yes, No, Unknown };

const char* to_string(Decision d);

struct PointedOptions {
    // Largest coset enumerated while deciding orbit membership in the
    // presence of a free summand; beyond it the answer is Unknown.
    std::uint64_t max_coset_size = 10000;
    // Trial-division bound used to split torsion factors into prime powers.
    std::uint64_t trial_division_limit = 1000000;
};

/// Is there an automorphism of the common group carrying p's point to q's?
Decision pointed_equivalent(const PointedGroup& p, const PointedGroup& q, const PointedOptions& options = {});

}  // namespace lpaflow
