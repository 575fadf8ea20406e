#include "trgr/plucker.hpp"

#include <algorithm>
#include <stdexcept>

#include "trgr/rng.hpp"

namespace trgr {

bool PluckerVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return c == 0; });
}

const Rat& PluckerVector::coord(const std::vector<int>& elements) const {
    for (std::size_t i = 0; i < index.size(); ++i)
        if (index[i].elements() == elements) return coords[i];
    throw std::out_of_range("PluckerVector::coord: index set not stored");
}

PluckerVector plucker(const RationalMatrix& Z, int level) {
    const int n = static_cast<int>(Z.rows());
    const int d = static_cast<int>(Z.cols());
    if (Z.rank() != static_cast<std::size_t>(d))
        throw std::invalid_argument("plucker: matrix must have full column rank");
    if (level < 0 || level > std::min(d, n - d))
        throw std::invalid_argument("plucker: level out of range");

    PluckerVector out;
    out.n = n;
    out.d = d;
    out.level = level;
    out.index = enumerate_index_sets(n, d, level);
    out.coords.reserve(out.index.size());
    std::vector<int> all_cols(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) all_cols[static_cast<std::size_t>(j)] = j;
    for (const IndexSet& I : out.index) {
        std::vector<int> rows;
        rows.reserve(I.elements().size());
        for (int e : I.elements()) rows.push_back(e - 1);
        out.coords.push_back(minor_det(Z, rows, all_cols));
    }
    return out;
}

RationalMatrix unipotent(const RationalMatrix& z) {
    const std::size_t k = z.rows();  // n - d
    const std::size_t d = z.cols();
    RationalMatrix g = RationalMatrix::identity(k + d);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < d; ++j) g.at(d + i, j) = z.at(i, j);
    return g;
}

int intersection_dim(const RationalMatrix& U) {
    const std::size_t n = U.rows();
    const std::size_t d = U.cols();
    if (d > n) throw std::invalid_argument("intersection_dim: more columns than rows");
    if (U.rank() != d) throw std::invalid_argument("intersection_dim: rank must be d");
    return static_cast<int>(d - U.top_rows(d).rank());
}

bool schubert_member(const RationalMatrix& U, int r) {
    return intersection_dim(U) >= r;
}

bool same_column_span(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) return false;
    const std::size_t ra = a.rank();
    if (ra != b.rank()) return false;
    return a.hcat(b).rank() == ra;
}

RationalMatrix sample_schubert(int n, int d, int r, int m, std::uint64_t seed) {
    if (d < 1 || d > n - d) throw std::invalid_argument("sample_schubert: need 1 <= d <= n-d");
    if (m > d) throw std::invalid_argument("sample_schubert: m > d is infeasible");
    if (r < 0 || r > m) throw std::invalid_argument("sample_schubert: need 0 <= r <= m");

    SeededRng rng(seed);
    // d - m columns with random top and bottom parts, m columns inside the
    // bottom block; retry until the exact intersection dimension and full
    // rank are certified, so samples are generic points of the m-stratum.
    for (int attempt = 0; attempt < 256; ++attempt) {
        RationalMatrix U(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            for (int i = (j < d - m ? 0 : d); i < n; ++i)
                U.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    rng.small_entry();
        if (U.rank() != static_cast<std::size_t>(d)) continue;
        if (intersection_dim(U) != m) continue;
        return U;
    }
    throw std::runtime_error("sample_schubert: sampling failed to reach exact intersection");
}

std::vector<std::vector<Rat>> collineation_point(const RationalMatrix& phi,
                                                 const std::vector<int>& s_list) {
    const int m = static_cast<int>(phi.rows());
    if (phi.cols() != phi.rows())
        throw std::invalid_argument("collineation_point: square matrix required");
    if (phi.rank() != phi.rows())
        throw std::invalid_argument("collineation_point: full rank required");
    for (std::size_t i = 0; i < s_list.size(); ++i) {
        if (s_list[i] < 1 || s_list[i] > m)
            throw std::invalid_argument("collineation_point: s out of range");
        if (i > 0 && s_list[i] <= s_list[i - 1])
            throw std::invalid_argument("collineation_point: s_list must strictly increase");
    }

    std::vector<std::vector<Rat>> out;
    for (int s : s_list) {
        std::vector<Rat> block;
        const auto subs = subsets_lex(m, s);
        block.reserve(subs.size() * subs.size());
        for (const auto& rows : subs)
            for (const auto& cols : subs) block.push_back(minor_det(phi, rows, cols));
        out.push_back(std::move(block));
    }
    return out;
}

}  // namespace trgr
