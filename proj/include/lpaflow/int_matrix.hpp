#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lpaflow {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntMatrix transposed() const;
    IntVector column(std::size_t j) const;
    IntVector apply(std::span<const Integer> x) const;

    // Horizontal concatenation [*this | other]; row counts must agree.
    IntMatrix concat_columns(const IntMatrix& other) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[target] += factor * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    bool is_zero() const;
    bool is_diagonal() const;

    // Rows separated by newlines, entries by single spaces.
    std::string to_string() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

}  // namespace lpaflow
