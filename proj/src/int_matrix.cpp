#include "lpaflow/int_matrix.hpp"

#include "lpaflow/errors.hpp"

#include <sstream>

namespace lpaflow {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw PreconditionError("ragged matrix literal");
        }
        for (long v : row) {
            entries_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        c[i] = (*this)(i, j);
    }
    return c;
}

IntVector IntMatrix::apply(std::span<const Integer> x) const {
    if (x.size() != cols_) {
        throw PreconditionError("matrix-vector dimension mismatch");
    }
    IntVector y(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            y[i] += (*this)(i, j) * x[j];
        }
    }
    return y;
}

IntMatrix IntMatrix::concat_columns(const IntMatrix& other) const {
    if (rows_ != other.rows_) {
        throw PreconditionError("column concatenation needs equal row counts");
    }
    IntMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            m(i, j) = (*this)(i, j);
        }
        for (std::size_t j = 0; j < other.cols_; ++j) {
            m(i, cols_ + j) = other(i, j);
        }
    }
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        std::swap((*this)(a, j), (*this)(b, j));
    }
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        std::swap((*this)(i, a), (*this)(i, b));
    }
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        (*this)(target, j) += factor * (*this)(source, j);
    }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, target) += factor * (*this)(i, source);
    }
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) {
        (*this)(i, j) = -(*this)(i, j);
    }
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) {
        (*this)(i, j) = -(*this)(i, j);
    }
}

bool IntMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (e != 0) return false;
    }
    return true;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i != j && (*this)(i, j) != 0) return false;
        }
    }
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << (*this)(i, j);
        }
        out << '\n';
    }
    return out.str();
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        if (a.entries_[k] != b.entries_[k]) return false;
    }
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw PreconditionError("matrix product dimension mismatch");
    }
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw PreconditionError("matrix sum dimension mismatch");
    }
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.entries_.size(); ++k) {
        c.entries_[k] += b.entries_[k];
    }
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw PreconditionError("matrix difference dimension mismatch");
    }
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.entries_.size(); ++k) {
        c.entries_[k] -= b.entries_[k];
    }
    return c;
}

}  // namespace lpaflow
