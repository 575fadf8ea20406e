#include "trgr/curves.hpp"

#include <stdexcept>

#include "trgr/index_set.hpp"

namespace trgr {

namespace {

void trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

UniPoly upoly_add(const UniPoly& a, const UniPoly& b) {
    UniPoly out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

UniPoly upoly_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

UniPoly upoly_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

bool upoly_is_zero(const UniPoly& p) {
    for (const Rat& c : p)
        if (c != 0) return false;
    return true;
}

long upoly_valuation(const UniPoly& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) return static_cast<long>(i);
    return -1;
}

Rat upoly_eval(const UniPoly& p, const Rat& t) {
    Rat v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
    return v;
}

PolyCurve::PolyCurve(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

PolyCurve PolyCurve::line(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("PolyCurve::line: shape mismatch");
    PolyCurve c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            UniPoly p{a.at(i, j), b.at(i, j)};
            trim(p);
            c.at(i, j) = std::move(p);
        }
    return c;
}

PolyCurve PolyCurve::quadratic(const RationalMatrix& a, const RationalMatrix& b,
                               const RationalMatrix& c) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != c.rows() ||
        a.cols() != c.cols())
        throw std::invalid_argument("PolyCurve::quadratic: shape mismatch");
    PolyCurve out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            UniPoly p{a.at(i, j), b.at(i, j), c.at(i, j)};
            trim(p);
            out.at(i, j) = std::move(p);
        }
    return out;
}

RationalMatrix PolyCurve::eval(const Rat& t) const {
    RationalMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = upoly_eval(at(i, j), t);
    return m;
}

UniPoly PolyCurve::minor(const std::vector<int>& row_idx,
                         const std::vector<int>& col_idx) const {
    if (row_idx.size() != col_idx.size())
        throw std::invalid_argument("PolyCurve::minor: ragged index lists");
    const std::size_t k = row_idx.size();
    if (k == 0) return UniPoly{Rat(1)};
    for (int r : row_idx)
        if (r < 0 || static_cast<std::size_t>(r) >= rows_)
            throw std::out_of_range("PolyCurve::minor: row index");
    for (int c : col_idx)
        if (c < 0 || static_cast<std::size_t>(c) >= cols_)
            throw std::out_of_range("PolyCurve::minor: column index");

    // Laplace expansion along the first row; k is small here.
    if (k == 1) return at(static_cast<std::size_t>(row_idx[0]),
                          static_cast<std::size_t>(col_idx[0]));
    UniPoly det;
    for (std::size_t j = 0; j < k; ++j) {
        const UniPoly& entry =
            at(static_cast<std::size_t>(row_idx[0]), static_cast<std::size_t>(col_idx[j]));
        if (upoly_is_zero(entry)) continue;
        std::vector<int> sub_rows(row_idx.begin() + 1, row_idx.end());
        std::vector<int> sub_cols;
        for (std::size_t c = 0; c < k; ++c)
            if (c != j) sub_cols.push_back(col_idx[c]);
        UniPoly term = upoly_mul(entry, minor(sub_rows, sub_cols));
        det = (j % 2 == 0) ? upoly_add(det, term) : upoly_sub(det, term);
    }
    return det;
}

std::vector<UniPoly> curve_plucker(const PolyCurve& z, int level) {
    const int n = static_cast<int>(z.rows());
    const int d = static_cast<int>(z.cols());
    std::vector<int> all_cols(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) all_cols[static_cast<std::size_t>(j)] = j;
    std::vector<UniPoly> out;
    for (const IndexSet& I : enumerate_index_sets(n, d, level)) {
        std::vector<int> rows;
        for (int e : I.elements()) rows.push_back(e - 1);
        out.push_back(z.minor(rows, all_cols));
    }
    return out;
}

LimitPoint limit_point(const std::vector<UniPoly>& coords) {
    long v = -1;
    for (const UniPoly& p : coords) {
        const long pv = upoly_valuation(p);
        if (pv >= 0 && (v < 0 || pv < v)) v = pv;
    }
    if (v < 0) throw std::invalid_argument("limit_point: all coordinates identically zero");
    LimitPoint out;
    out.valuation = v;
    out.point.reserve(coords.size());
    for (const UniPoly& p : coords)
        out.point.push_back(static_cast<std::size_t>(v) < p.size() ? p[static_cast<std::size_t>(v)]
                                                                   : Rat(0));
    return out;
}

}  // namespace trgr
