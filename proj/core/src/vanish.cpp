#include "trgr/vanish.hpp"

#include <stdexcept>

namespace trgr {

std::vector<Monomial> monomials_of_degree(int nvars, int D, bool exact) {
    if (nvars < 1 || D < 0) throw std::invalid_argument("monomials_of_degree: bad arguments");
    std::vector<Monomial> out;
    Monomial cur(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            cur[static_cast<std::size_t>(var)] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[static_cast<std::size_t>(var)] = e;
            rec(var + 1, left - e);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    };
    if (exact) {
        rec(0, D);
    } else {
        for (int deg = 0; deg <= D; ++deg) rec(0, deg);
    }
    return out;
}

std::vector<MultiPoly> vanishing_space(const std::vector<std::vector<Rat>>& points, int D,
                                       bool exact_degree) {
    if (points.empty()) throw std::invalid_argument("vanishing_space: empty point set");
    const std::size_t nvars = points[0].size();
    for (const auto& p : points)
        if (p.size() != nvars) throw std::invalid_argument("vanishing_space: ragged points");

    const auto monos = monomials_of_degree(static_cast<int>(nvars), D, exact_degree);
    RationalMatrix ev(points.size(), monos.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < monos.size(); ++j) {
            Rat v = 1;
            for (std::size_t k = 0; k < nvars; ++k)
                for (int e = 0; e < monos[j][k]; ++e) v *= points[i][k];
            ev.at(i, j) = v;
        }

    auto ring = PolyRing::standard(static_cast<int>(nvars));
    std::vector<MultiPoly> basis;
    for (const auto& coeffs : ev.kernel()) {
        MultiPoly f(ring);
        for (std::size_t j = 0; j < monos.size(); ++j) f.add_term(monos[j], coeffs[j]);
        basis.push_back(f.primitive(MonomialOrder::grevlex()));
    }
    return basis;
}

StabilizedDim stabilized_vanishing_dim(
    const std::function<std::vector<std::vector<Rat>>()>& sampler, int D, int min_points,
    int max_points) {
    StabilizedDim out;
    std::vector<std::vector<Rat>> points;
    long prev = -1;
    while (static_cast<int>(points.size()) < max_points) {
        auto batch = sampler();
        if (batch.empty()) break;
        points.insert(points.end(), batch.begin(), batch.end());
        if (static_cast<int>(points.size()) < min_points) continue;
        const long dim = static_cast<long>(vanishing_space(points, D).size());
        out.history.push_back(dim);
        out.points_used = static_cast<int>(points.size());
        if (dim == prev) {
            out.dim = dim;
            out.stabilized = true;
            return out;
        }
        prev = dim;
    }
    out.dim = prev;
    return out;  // not stabilized
}

long jacobian_rank(const std::vector<MultiPoly>& map, const std::vector<Rat>& point) {
    if (map.empty()) return 0;
    const std::size_t nvars = map.front().ring()->size();
    if (point.size() != nvars) throw std::invalid_argument("jacobian_rank: dimension mismatch");
    RationalMatrix jac(map.size(), nvars);
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i].ring()->names != map.front().ring()->names)
            throw std::invalid_argument("jacobian_rank: mixed rings");
        for (std::size_t j = 0; j < nvars; ++j) jac.at(i, j) = map[i].derivative(j).eval(point);
    }
    return static_cast<long>(jac.rank());
}

GenericRank generic_jacobian_rank(const std::vector<MultiPoly>& map, SeededRng& rng,
                                  int trials, long lo, long hi) {
    GenericRank out;
    if (map.empty()) {
        out.agreed = true;
        return out;
    }
    const std::size_t nvars = map.front().ring()->size();
    for (int t = 0; t < trials; ++t) {
        std::vector<Rat> point(nvars);
        for (auto& x : point) x = rng.uniform_int(lo, hi);
        out.ranks.push_back(jacobian_rank(map, point));
    }
    out.rank = *std::max_element(out.ranks.begin(), out.ranks.end());
    out.agreed = std::all_of(out.ranks.begin(), out.ranks.end(),
                             [&](long r) { return r == out.rank; });
    return out;
}

long determinantal_dim(int N, int c) {
    if (c < 0 || c > N) throw std::invalid_argument("determinantal_dim: need 0 <= c <= N");
    return static_cast<long>(c) * (2L * N - c);
}

}  // namespace trgr
