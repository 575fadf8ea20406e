#pragma once

#include <optional>
#include <vector>

#include "trgr/numeric.hpp"
#include "trgr/partition.hpp"

namespace trgr {

/// rho(N) = (N, N-1, ..., 1).
GLWeight rho(int N);

struct SortedWeight {
    std::vector<long> sorted;  // strictly decreasing rearrangement
    long inversions = 0;       // length of the sorting permutation
};

/// Strictly decreasing rearrangement together with the number of inversions
/// (pairs i < j with w_i < w_j). Empty result when two entries coincide: a
/// singular weight, which is a value, not an error.
std::optional<SortedWeight> sort_with_length(const std::vector<long>& w);

/// Weight data of the homogeneous bundle Schur_a(U_d^*) (x) Schur_b((V/U_d)^*)
/// on the Grassmannian of d-planes in n-space. This sign convention is the one
/// under which O(1) = Schur_{(1,...,1)}(U_d^*) and the projective-line suite
/// reproduces the classical line-bundle cohomology.
struct BundleWeight {
    GLWeight a;  // length d
    GLWeight b;  // length n - d
    int n = 0;
    int d = 0;
};

struct CohomologyResult {
    bool vanishes = true;
    int degree = 0;                  // meaningful when !vanishes
    std::optional<GLWeight> weight;  // weight of the dual module, length n
    Int dimension = 0;
};

/// Bott's algorithm: kappa = (a, b); vanishes iff kappa + rho(n) has a
/// repeated entry, else the single cohomology sits in degree l(sigma) with
/// weight sigma(kappa + rho) - rho.
CohomologyResult bwb(const BundleWeight& bw);

struct Pushforward {
    long inversions = 0;
    GLWeight weight;  // weight on the (n-d)-dimensional factor, length N
};

/// Cohomology along the fibers of the incidence desingularization: for lam
/// with at most r parts and lam_1 <= N, forms the length-N sequence
/// lam* + rho = (N - lam_r, ..., N - r + 1 - lam_1, N - r, ..., 1) and sorts
/// it. Empty result when singular. The layer a surviving term lands in is
/// |lam| - inversions, computed by the caller.
std::optional<Pushforward> fiberwise_pushforward(const Partition& lam, int r, int N);

/// Closed-form length a * (N - r), where a counts the nonpositive entries of
/// the head of lam* + rho. Cross-check only; agrees with the inversion count
/// whenever the weight is regular. Empty result when singular.
std::optional<long> shortcut_length(const Partition& lam, int r, int N);

}  // namespace trgr
