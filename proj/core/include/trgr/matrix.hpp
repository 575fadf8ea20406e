#pragma once

#include <cstddef>
#include <vector>

#include "trgr/numeric.hpp"

namespace trgr {

/// Dense matrix of exact rationals. Rank, kernel and determinants are
/// computed by exact Gaussian elimination and are reproducible.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

    static RationalMatrix identity(std::size_t n);
    /// Row-major integer initializer, for tests and constructions.
    static RationalMatrix from_ints(std::size_t rows, std::size_t cols,
                                    const std::vector<long>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    bool operator==(const RationalMatrix& o) const;

    RationalMatrix submatrix(const std::vector<int>& row_idx,
                             const std::vector<int>& col_idx) const;
    /// Glue o to the right (same row count).
    RationalMatrix hcat(const RationalMatrix& o) const;
    RationalMatrix top_rows(std::size_t k) const;

    std::size_t rank() const;
    Rat det() const;
    /// Basis of the right kernel {x : Mx = 0}, one column vector per element.
    std::vector<std::vector<Rat>> kernel() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// Determinant of the square submatrix on the given row/column index lists
/// (0-based). Lists must have equal length and be in range; repeated indices
/// give a zero determinant.
Rat minor_det(const RationalMatrix& m, const std::vector<int>& row_idx,
              const std::vector<int>& col_idx);

/// Rank of the span of a set of vectors (rows).
std::size_t span_rank(const std::vector<std::vector<Rat>>& vectors);

}  // namespace trgr
