#include "trgr/matrix.hpp"

#include <stdexcept>

namespace trgr {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw std::invalid_argument("RationalMatrix: entry count mismatch");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_ints(std::size_t rows, std::size_t cols,
                                         const std::vector<long>& entries) {
    if (entries.size() != rows * cols)
        throw std::invalid_argument("from_ints: entry count mismatch");
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = entries[i];
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<int>& row_idx,
                                         const std::vector<int>& col_idx) const {
    RationalMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        if (row_idx[i] < 0 || static_cast<std::size_t>(row_idx[i]) >= rows_)
            throw std::out_of_range("submatrix: row index");
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            if (col_idx[j] < 0 || static_cast<std::size_t>(col_idx[j]) >= cols_)
                throw std::out_of_range("submatrix: column index");
            out.at(i, j) = at(static_cast<std::size_t>(row_idx[i]),
                              static_cast<std::size_t>(col_idx[j]));
        }
    }
    return out;
}

RationalMatrix RationalMatrix::hcat(const RationalMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat: row count mismatch");
    RationalMatrix out(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
    }
    return out;
}

RationalMatrix RationalMatrix::top_rows(std::size_t k) const {
    if (k > rows_) throw std::invalid_argument("top_rows: too many rows requested");
    RationalMatrix out(k, cols_);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    return out;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix w(*this);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && w.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        std::swap_ranges(&w.at(pivot, 0), &w.at(pivot, 0) + cols_, &w.at(rank, 0));
        const Rat inv = 1 / w.at(rank, col);
        for (std::size_t j = col; j < cols_; ++j) w.at(rank, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == rank || w.at(i, col) == 0) continue;
            const Rat f = w.at(i, col);
            for (std::size_t j = col; j < cols_; ++j) w.at(i, j) -= f * w.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

Rat RationalMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: not square");
    if (rows_ == 0) return 1;
    RationalMatrix w(*this);
    Rat det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && w.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) return 0;
        if (pivot != col) {
            std::swap_ranges(&w.at(pivot, 0), &w.at(pivot, 0) + cols_, &w.at(col, 0));
            det = -det;
        }
        det *= w.at(col, col);
        const Rat inv = 1 / w.at(col, col);
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (w.at(i, col) == 0) continue;
            const Rat f = w.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) w.at(i, j) -= f * w.at(col, j);
        }
    }
    return det;
}

std::vector<std::vector<Rat>> RationalMatrix::kernel() const {
    RationalMatrix w(*this);
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && w.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        std::swap_ranges(&w.at(pivot, 0), &w.at(pivot, 0) + cols_, &w.at(rank, 0));
        const Rat inv = 1 / w.at(rank, col);
        for (std::size_t j = col; j < cols_; ++j) w.at(rank, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == rank || w.at(i, col) == 0) continue;
            const Rat f = w.at(i, col);
            for (std::size_t j = col; j < cols_; ++j) w.at(i, j) -= f * w.at(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -w.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat minor_det(const RationalMatrix& m, const std::vector<int>& row_idx,
              const std::vector<int>& col_idx) {
    if (row_idx.size() != col_idx.size())
        throw std::invalid_argument("minor_det: ragged index lists");
    return m.submatrix(row_idx, col_idx).det();
}

std::size_t span_rank(const std::vector<std::vector<Rat>>& vectors) {
    if (vectors.empty()) return 0;
    const std::size_t n = vectors[0].size();
    RationalMatrix m(vectors.size(), n);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != n) throw std::invalid_argument("span_rank: ragged vectors");
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = vectors[i][j];
    }
    return m.rank();
}

}  // namespace trgr
