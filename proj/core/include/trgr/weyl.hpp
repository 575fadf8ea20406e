#pragma once

#include <vector>

#include "trgr/numeric.hpp"
#include "trgr/partition.hpp"

namespace trgr {

/// Dimension of the irreducible gl_N module of highest weight mu
/// (product formula). Invariant under determinant twists mu + c(1,...,1).
Int weyl_dim(int N, const GLWeight& mu);

/// Same for a partition padded with zeros; zero when lam has more than N parts.
Int weyl_dim(int N, const Partition& lam);

/// Number of semistandard tableaux of shape lam with entries in {1,...,N},
/// by exhaustive enumeration. Independent oracle for weyl_dim on partitions.
Int ssyt_count(int N, const Partition& lam);

/// Column Pieri rule: all mu obtained from lam by adding a vertical strip of
/// size k (at most one box per row) with at most N parts. Each multiplicity 1;
/// sum of weyl_dim(N, mu) equals weyl_dim(N, lam) * C(N, k).
std::vector<Partition> pieri_column(const Partition& lam, int k, int N);

}  // namespace trgr
