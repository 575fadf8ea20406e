#pragma once

#include <cstdint>
#include <vector>

#include "trgr/index_set.hpp"
#include "trgr/matrix.hpp"
#include "trgr/plucker.hpp"

namespace trgr {

/// A partial collineation space on m-dimensional source and target: the
/// closure of phi -> ([Lambda^{s_1} phi], ..., [Lambda^{s_k} phi]) over full
/// rank maps. An empty s_list denotes a point.
struct CollineationSpec {
    int m = 0;
    std::vector<int> s_list;
};

enum class CellStratum { Empty, Affine, Determinantal };

/// The intersection of the standard affine cell around p_J with the Schubert
/// variety: empty when r exceeds the degree of J, a pure affine space when
/// they agree, and a determinantal variety times an affine factor otherwise.
struct CellIntersection {
    IndexSet J;
    int r = 0;
    int m = 0;  // degree of J
    CellStratum stratum = CellStratum::Empty;
    long dimension = -1;  // d(n-d) - r^2 whenever nonempty
};

CellIntersection cell_intersection(const IndexSet& J, int r);

/// Fiber of the mixed blow-up projection over a point whose intersection
/// dimension is m: the collineation spec with s = (m+1-r_j, ..., m+1-r_1)
/// where j is the largest index with r_j <= m; j = 0 gives a point fiber.
CollineationSpec fiber_classifier(int m, const std::vector<int>& r_list, int d);

/// A point of the orbit model of the mixed blow-up: the full coordinate
/// vector together with its truncations at levels r_i - 1, all coming from
/// the same matrix.
struct OrbitPoint {
    PluckerVector base;                    // level d
    std::vector<PluckerVector> components; // level r_i - 1 each
};

OrbitPoint orbit_point(const RationalMatrix& z, const std::vector<int>& r_list);

struct CurveLimit {
    long valuation = 0;
    std::vector<Rat> limit;
};

struct ExceptionalProbe {
    int n = 0, d = 0, r = 0;
    std::uint64_t seed = 0;
    std::vector<CurveLimit> curves;
    long span_dim = 0;
    long proj_dim = -1;
    bool quadratic_fallback = false;
};

/// Probes the exceptional fiber over U: pushes random matrix curves landing
/// at U through the level-(r-1) truncated coordinates and takes t -> 0
/// limits. The projective dimension of the span of the limits is a certified
/// lower bound for the fiber dimension.
ExceptionalProbe exceptional_probe(const RationalMatrix& U, int r, int curve_count,
                                   std::uint64_t seed);

struct SmoothnessSample {
    bool on_exceptional = false;  // sampled with the scaling parameter at zero
    long rank = 0;
    bool full = false;
};

struct SmoothnessReport {
    int n = 0, d = 0;
    std::uint64_t seed = 0;
    long expected_rank = 0;  // d(n-d)
    std::vector<SmoothnessSample> samples;
    bool pass = false;
};

/// Samples the chart of the complete blow-up over the deepest stratum and
/// certifies that the local parametrization has full Jacobian rank d(n-d) at
/// every sampled point (chart coordinates; exact arithmetic). Desk scale:
/// d <= 3.
SmoothnessReport smoothness_probe(int n, int d, int chart_samples, std::uint64_t seed);

}  // namespace trgr
