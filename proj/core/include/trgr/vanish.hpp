#pragma once

#include <functional>
#include <vector>

#include "trgr/matrix.hpp"
#include "trgr/poly.hpp"
#include "trgr/rng.hpp"

namespace trgr {

/// All monomials in nvars variables of total degree exactly D (or of degree
/// at most D when `exact` is false), in a fixed deterministic order.
std::vector<Monomial> monomials_of_degree(int nvars, int D, bool exact = true);

/// Basis of the space of degree-D forms vanishing on every point, as the
/// exact kernel of the evaluation matrix. Projective sample sets should use
/// exact_degree = true (only homogeneous forms are meaningful there).
std::vector<MultiPoly> vanishing_space(const std::vector<std::vector<Rat>>& points, int D,
                                       bool exact_degree = true);

struct StabilizedDim {
    long dim = -1;
    bool stabilized = false;
    std::vector<long> history;  // dimension after each batch
    int points_used = 0;
};

/// Dimension of the degree-D vanishing space of a growing sample, reported
/// only after two consecutive batches agree. The sampler must return a fresh
/// batch of points on every call.
StabilizedDim stabilized_vanishing_dim(
    const std::function<std::vector<std::vector<Rat>>()>& sampler, int D, int min_points,
    int max_points);

/// Exact rank of the Jacobian of the polynomial map at the point.
long jacobian_rank(const std::vector<MultiPoly>& map, const std::vector<Rat>& point);

struct GenericRank {
    long rank = 0;   // maximum over the trials
    bool agreed = false;
    std::vector<long> ranks;
};

/// Jacobian rank at several independent random integer points. Disagreement
/// between trials is reported (agreed = false), never silently averaged.
GenericRank generic_jacobian_rank(const std::vector<MultiPoly>& map, SeededRng& rng,
                                  int trials = 3, long lo = -10, long hi = 10);

/// Dimension of the variety of N x N matrices of rank at most c:
/// N^2 - (N-c)^2 = c(2N - c).
long determinantal_dim(int N, int c);

}  // namespace trgr
