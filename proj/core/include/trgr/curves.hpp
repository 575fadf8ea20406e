#pragma once

#include <functional>
#include <vector>

#include "trgr/matrix.hpp"
#include "trgr/numeric.hpp"

namespace trgr {

/// Univariate polynomial in a curve parameter t; coefficients ascending.
using UniPoly = std::vector<Rat>;

UniPoly upoly_add(const UniPoly& a, const UniPoly& b);
UniPoly upoly_sub(const UniPoly& a, const UniPoly& b);
UniPoly upoly_mul(const UniPoly& a, const UniPoly& b);
bool upoly_is_zero(const UniPoly& p);
/// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
long upoly_valuation(const UniPoly& p);
Rat upoly_eval(const UniPoly& p, const Rat& t);

/// Matrix of univariate polynomials: a curve of matrices t -> M(t).
class PolyCurve {
public:
    PolyCurve(std::size_t rows, std::size_t cols);

    /// Affine curve A + tB.
    static PolyCurve line(const RationalMatrix& a, const RationalMatrix& b);
    /// Quadratic curve A + tB + t^2 C.
    static PolyCurve quadratic(const RationalMatrix& a, const RationalMatrix& b,
                               const RationalMatrix& c);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    UniPoly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const UniPoly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RationalMatrix eval(const Rat& t) const;

    /// Exact determinant of the square submatrix of polynomial entries.
    UniPoly minor(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<UniPoly> entries_;
};

/// Truncated minor coordinates of a matrix curve: Delta_I(t) for all I with
/// deg I <= level, in the canonical enumeration order.
std::vector<UniPoly> curve_plucker(const PolyCurve& z, int level);

struct LimitPoint {
    std::vector<Rat> point;  // nonzero projective representative at t = 0
    long valuation = 0;      // joint t-adic normalization used
};

/// Divide the coordinate vector by t^v, v the minimum valuation across all
/// coordinates jointly, and evaluate at t = 0. Throws when every coordinate
/// is identically zero.
LimitPoint limit_point(const std::vector<UniPoly>& coords);

}  // namespace trgr
