#pragma once

#include <cstdint>
#include <vector>

#include "trgr/index_set.hpp"
#include "trgr/matrix.hpp"
#include "trgr/numeric.hpp"

namespace trgr {

/// Coordinates Delta_I for all I with deg I <= level, in the canonical
/// enumeration order. level = d recovers the full set of coordinates; lower
/// levels simply forget the high-degree ones.
struct PluckerVector {
    int n = 0, d = 0, level = 0;
    std::vector<IndexSet> index;  // enumerate_index_sets(n, d, level)
    std::vector<Rat> coords;      // parallel to index

    bool is_zero() const;
    /// Coordinate lookup by index-set elements; throws when outside the level.
    const Rat& coord(const std::vector<int>& elements) const;
};

/// Truncated minor map of an n x d matrix of rank d.
PluckerVector plucker(const RationalMatrix& Z, int level);

/// exp of a strictly block-lower map: identity diagonal blocks, z in the
/// lower-left (n-d) x d block. Satisfies unipotent(z) unipotent(z') =
/// unipotent(z + z').
RationalMatrix unipotent(const RationalMatrix& z);

/// dim(colspan(U) cap span(e_{d+1},...,e_n)) = d - rank(top d rows); requires
/// rank(U) = d.
int intersection_dim(const RationalMatrix& U);

/// Membership in the Schubert variety S_r: intersection dimension >= r.
bool schubert_member(const RationalMatrix& U, int r);

/// Equality of subspace points: column spans agree, tested by the rank of
/// the concatenation.
bool same_column_span(const RationalMatrix& a, const RationalMatrix& b);

/// Deterministic seeded sample: an n x d basis matrix whose column span meets
/// the bottom coordinate subspace in dimension exactly m (so it lies in S_m
/// and in S_r for every r <= m). Requires r <= m <= d.
RationalMatrix sample_schubert(int n, int d, int r, int m, std::uint64_t seed);

/// For each s in s_list, the vector of all s x s minors of a full-rank square
/// matrix, indexed by (row subset, column subset) pairs in lexicographic
/// order.
std::vector<std::vector<Rat>> collineation_point(const RationalMatrix& phi,
                                                 const std::vector<int>& s_list);

}  // namespace trgr
