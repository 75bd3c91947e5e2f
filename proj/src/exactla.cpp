#include "lpaflow/exactla.hpp"

#include "lpaflow/errors.hpp"

#include <optional>
#include <sstream>
#include <utility>

namespace lpaflow {

Integer det(const IntMatrix& a) {
    if (!a.square()) {
        throw PreconditionError("determinant of a non-square matrix");
    }
    const std::size_t n = a.rows();
    if (n == 0) return Integer(1);

    IntMatrix m = a;
    Integer previous = 1;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_with = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (m(i, k) != 0) {
                    swap_with = i;
                    break;
                }
            }
            if (swap_with == k) return Integer(0);
            m.swap_rows(k, swap_with);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                m(i, j) = std::move(v);
            }
            m(i, k) = 0;
        }
        previous = m(k, k);
    }
    return negate ? Integer(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

IntVector SmithDecomposition::diagonal_entries() const {
    const std::size_t r = std::min(diagonal.rows(), diagonal.cols());
    IntVector d(r);
    for (std::size_t i = 0; i < r; ++i) {
        d[i] = diagonal(i, i);
    }
    return d;
}

namespace {

struct SmithState {
    IntMatrix s;
    IntMatrix u;
    IntMatrix u_inv;
    IntMatrix v;

    // row[target] += factor * row[source]
    void row_add(std::size_t target, std::size_t source, const Integer& factor) {
        s.add_row_multiple(target, source, factor);
        u.add_row_multiple(target, source, factor);
        u_inv.add_col_multiple(source, target, Integer(-factor));
    }
    void col_add(std::size_t target, std::size_t source, const Integer& factor) {
        s.add_col_multiple(target, source, factor);
        v.add_col_multiple(target, source, factor);
    }
    void row_swap(std::size_t a, std::size_t b) {
        s.swap_rows(a, b);
        u.swap_rows(a, b);
        u_inv.swap_cols(a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        s.swap_cols(a, b);
        v.swap_cols(a, b);
    }
};

std::optional<std::pair<std::size_t, std::size_t>> least_pivot(const IntMatrix& s, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < s.rows(); ++i) {
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Integer a = abs(s(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = std::move(a);
            }
        }
    }
    return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithState st{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        bool exhausted = false;
        while (true) {
            const auto pivot = least_pivot(st.s, t);
            if (!pivot) {
                exhausted = true;
                break;
            }
            st.row_swap(t, pivot->first);
            st.col_swap(t, pivot->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (st.s(i, t) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), st.s(i, t).get_mpz_t(), st.s(t, t).get_mpz_t());
                st.row_add(i, t, Integer(-q));
                if (st.s(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (st.s(t, j) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), st.s(t, j).get_mpz_t(), st.s(t, t).get_mpz_t());
                st.col_add(j, t, Integer(-q));
                if (st.s(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // The pivot must divide the whole remaining block.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (!mpz_divisible_p(st.s(i, j).get_mpz_t(), st.s(t, t).get_mpz_t())) {
                        st.row_add(t, i, Integer(1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        if (exhausted) break;
        if (st.s(t, t) < 0) {
            st.s.negate_col(t);
            st.v.negate_col(t);
        }
    }
    return SmithDecomposition{std::move(st.u), std::move(st.s), std::move(st.v), std::move(st.u_inv)};
}

AbelianGroup::AbelianGroup(IntVector torsion, std::size_t free_rank)
    : torsion_(std::move(torsion)), free_rank_(free_rank) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2) {
            throw PreconditionError("invariant factors must be at least 2");
        }
        if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t())) {
            throw PreconditionError("invariant factors must form a divisibility chain");
        }
    }
}

Integer AbelianGroup::torsion_order() const {
    Integer order = 1;
    for (const auto& d : torsion_) order *= d;
    return order;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& d : torsion_) {
        out << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    if (free_rank_ > 0) {
        out << (first ? "" : " + ") << "Z^" << free_rank_;
    }
    return out.str();
}

bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    if (a.free_rank_ != b.free_rank_ || a.torsion_.size() != b.torsion_.size()) return false;
    for (std::size_t i = 0; i < a.torsion_.size(); ++i) {
        if (a.torsion_[i] != b.torsion_[i]) return false;
    }
    return true;
}

PointedGroup::PointedGroup(AbelianGroup group, IntVector point) : group_(std::move(group)), point_(std::move(point)) {
    if (point_.size() != group_.coordinate_count()) {
        throw PreconditionError("point has " + std::to_string(point_.size()) + " coordinates, group needs " +
                                std::to_string(group_.coordinate_count()));
    }
    for (std::size_t i = 0; i < group_.torsion().size(); ++i) {
        mpz_fdiv_r(point_[i].get_mpz_t(), point_[i].get_mpz_t(), group_.torsion()[i].get_mpz_t());
    }
}

std::string PointedGroup::to_string() const {
    std::ostringstream out;
    out << "(" << group_.to_string() << ", [";
    for (std::size_t i = 0; i < point_.size(); ++i) {
        out << (i ? ", " : "") << point_[i];
    }
    out << "])";
    return out.str();
}

CokernelProjection::CokernelProjection(IntMatrix left, IntVector factors)
    : left_(std::move(left)), factors_(std::move(factors)) {}

IntVector CokernelProjection::operator()(std::span<const Integer> x) const {
    const IntVector y = left_.apply(x);
    IntVector torsion_part;
    IntVector free_part;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const Integer& d = factors_[i];
        if (d == 1) continue;
        if (d == 0) {
            free_part.push_back(y[i]);
        } else {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), d.get_mpz_t());
            torsion_part.push_back(std::move(r));
        }
    }
    torsion_part.insert(torsion_part.end(), free_part.begin(), free_part.end());
    return torsion_part;
}

Cokernel cokernel(const IntMatrix& a) {
    if (!a.square()) {
        throw PreconditionError("cokernel requires a square matrix");
    }
    SmithDecomposition snf = smith_normal_form(a);
    IntVector factors = snf.diagonal_entries();
    IntVector torsion;
    std::size_t free_rank = 0;
    for (const auto& d : factors) {
        if (d == 0) {
            ++free_rank;
        } else if (d != 1) {
            torsion.push_back(d);
        }
    }
    return Cokernel{AbelianGroup(std::move(torsion), free_rank),
                    CokernelProjection(std::move(snf.left), std::move(factors))};
}

bool in_column_span(const IntMatrix& a, std::span<const Integer> y) {
    if (y.size() != a.rows()) {
        throw PreconditionError("lattice membership dimension mismatch");
    }
    const SmithDecomposition snf = smith_normal_form(a);
    const IntVector z = snf.left.apply(y);
    const std::size_t r = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < z.size(); ++i) {
        const Integer d = i < r ? snf.diagonal(i, i) : Integer(0);
        if (d == 0) {
            if (z[i] != 0) return false;
        } else if (!mpz_divisible_p(z[i].get_mpz_t(), d.get_mpz_t())) {
            return false;
        }
    }
    return true;
}

bool group_iso(const AbelianGroup& g, const AbelianGroup& h) { return g == h; }

const char* to_string(Decision d) {
    switch (d) {
        case Decision::Yes: return "yes";
        case Decision::No: return "no";
        case Decision::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace lpaflow
