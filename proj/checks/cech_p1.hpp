#pragma once

#include <utility>

namespace trgr::checks {

// Cohomology of the degree-k line bundle on the projective line, computed
// from the two-chart covering by exact linear algebra: sections over the two
// charts are polynomial windows glued over the Laurent window of the overlap,
// h0 is the kernel dimension of the difference map and h1 the cokernel
// dimension. Independent of the weight-sorting route.
std::pair<long, long> cech_p1_cohomology(int k);

}  // namespace trgr::checks
