#include "trgr/bwb.hpp"

#include <algorithm>
#include <stdexcept>

#include "trgr/weyl.hpp"

namespace trgr {

GLWeight rho(int N) {
    if (N < 1) throw std::invalid_argument("rho: N >= 1 required");
    std::vector<long> e(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) e[static_cast<std::size_t>(i)] = N - i;
    return GLWeight(std::move(e));
}

std::optional<SortedWeight> sort_with_length(const std::vector<long>& w) {
    SortedWeight out;
    out.sorted = w;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] == w[j]) return std::nullopt;
            if (w[i] < w[j]) ++out.inversions;
        }
    std::sort(out.sorted.begin(), out.sorted.end(), std::greater<long>());
    return out;
}

CohomologyResult bwb(const BundleWeight& bw) {
    if (bw.d < 1 || bw.d >= bw.n) throw std::invalid_argument("bwb: need 1 <= d < n");
    if (static_cast<int>(bw.a.size()) != bw.d ||
        static_cast<int>(bw.b.size()) != bw.n - bw.d)
        throw std::invalid_argument("bwb: weight length mismatch");

    std::vector<long> kappa_rho;
    kappa_rho.reserve(static_cast<std::size_t>(bw.n));
    const GLWeight rho_n = rho(bw.n);
    std::size_t pos = 0;
    for (long x : bw.a.entries()) kappa_rho.push_back(x + rho_n.entry(pos++));
    for (long x : bw.b.entries()) kappa_rho.push_back(x + rho_n.entry(pos++));

    CohomologyResult res;
    auto sorted = sort_with_length(kappa_rho);
    if (!sorted) return res;  // singular: everything vanishes

    std::vector<long> wt(sorted->sorted);
    for (std::size_t i = 0; i < wt.size(); ++i) wt[i] -= rho_n.entry(i);
    res.vanishes = false;
    res.degree = static_cast<int>(sorted->inversions);
    // Inversions only occur between the two decreasing blocks.
    if (res.degree < 0 || res.degree > bw.d * (bw.n - bw.d))
        throw std::logic_error("bwb: degree outside [0, d(n-d)]");
    res.weight = GLWeight(std::move(wt));
    res.dimension = weyl_dim(bw.n, *res.weight);
    return res;
}

namespace {

// Head-and-tail sequence lam* + rho of the fiberwise computation. The head is
// strictly decreasing by construction; singularity can only come from a head
// entry hitting the tail range {N-r, ..., 1}.
std::vector<long> mixed_weight(const Partition& lam, int r, int N) {
    if (r < 0 || r > N) throw std::invalid_argument("fiberwise: need 0 <= r <= N");
    if (static_cast<int>(lam.length()) > r)
        throw std::invalid_argument("fiberwise: lam has more than r parts");
    if (lam.part(0) > N)
        throw std::invalid_argument("fiberwise: lam_1 exceeds N");
    std::vector<long> w(static_cast<std::size_t>(N));
    for (int i = 1; i <= r; ++i)
        w[static_cast<std::size_t>(i - 1)] =
            N - i + 1 - lam.part(static_cast<std::size_t>(r - i));
    for (int i = r + 1; i <= N; ++i) w[static_cast<std::size_t>(i - 1)] = N - i + 1;
    return w;
}

}  // namespace

std::optional<Pushforward> fiberwise_pushforward(const Partition& lam, int r, int N) {
    const std::vector<long> w = mixed_weight(lam, r, N);
    auto sorted = sort_with_length(w);
    if (!sorted) return std::nullopt;
    std::vector<long> wt(sorted->sorted);
    const GLWeight rho_N = rho(N);
    for (std::size_t i = 0; i < wt.size(); ++i) wt[i] -= rho_N.entry(i);
    return Pushforward{sorted->inversions, GLWeight(std::move(wt))};
}

std::optional<long> shortcut_length(const Partition& lam, int r, int N) {
    const std::vector<long> w = mixed_weight(lam, r, N);
    long nonpositive = 0;
    for (int i = 0; i < r; ++i) {
        const long mu = w[static_cast<std::size_t>(i)];
        if (mu >= 1 && mu <= N - r) return std::nullopt;  // singular
        if (mu <= 0) ++nonpositive;
    }
    return nonpositive * (N - r);
}

}  // namespace trgr
