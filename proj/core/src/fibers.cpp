#include "trgr/fibers.hpp"

#include <stdexcept>

#include "trgr/curves.hpp"
#include "trgr/poly.hpp"
#include "trgr/rng.hpp"
#include "trgr/vanish.hpp"

namespace trgr {

CellIntersection cell_intersection(const IndexSet& J, int r) {
    const int n = J.n();
    const int d = J.d();
    if (r < 0 || r > d) throw std::invalid_argument("cell_intersection: need 0 <= r <= d");
    CellIntersection out{J, r, J.degree(), CellStratum::Empty, -1};
    const long cell_dim = static_cast<long>(d) * (n - d);
    if (r > out.m) return out;
    if (r == out.m) {
        out.stratum = CellStratum::Affine;
        out.dimension = cell_dim - static_cast<long>(r) * r;
        return out;
    }
    out.stratum = CellStratum::Determinantal;
    out.dimension = determinantal_dim(out.m, out.m - r) + cell_dim -
                    static_cast<long>(out.m) * out.m;
    return out;
}

CollineationSpec fiber_classifier(int m, const std::vector<int>& r_list, int d) {
    if (m < 0 || m > d) throw std::invalid_argument("fiber_classifier: need 0 <= m <= d");
    for (std::size_t i = 0; i < r_list.size(); ++i) {
        if (r_list[i] <= 1 || r_list[i] > d)
            throw std::invalid_argument("fiber_classifier: r values must lie in (1, d]");
        if (i > 0 && r_list[i] <= r_list[i - 1])
            throw std::invalid_argument("fiber_classifier: r_list must strictly increase");
    }
    CollineationSpec spec;
    spec.m = m;
    for (std::size_t i = r_list.size(); i-- > 0;)
        if (r_list[i] <= m) spec.s_list.push_back(m + 1 - r_list[i]);
    return spec;
}

OrbitPoint orbit_point(const RationalMatrix& z, const std::vector<int>& r_list) {
    const int k = static_cast<int>(z.rows());  // n - d
    const int d = static_cast<int>(z.cols());
    const int n = k + d;
    RationalMatrix E(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) E.at(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = 1;
    const RationalMatrix Z = unipotent(z) * E;

    OrbitPoint out;
    out.base = plucker(Z, d);
    for (int r : r_list) {
        if (r <= 1 || r > d)
            throw std::invalid_argument("orbit_point: r values must lie in (1, d]");
        out.components.push_back(plucker(Z, r - 1));
    }
    return out;
}

ExceptionalProbe exceptional_probe(const RationalMatrix& U, int r, int curve_count,
                                   std::uint64_t seed) {
    const int n = static_cast<int>(U.rows());
    const int d = static_cast<int>(U.cols());
    if (r < 1 || r > d) throw std::invalid_argument("exceptional_probe: need 1 <= r <= d");
    if (!schubert_member(U, r))
        throw std::invalid_argument("exceptional_probe: the base point is not in the center");

    ExceptionalProbe out;
    out.n = n;
    out.d = d;
    out.r = r;
    out.seed = seed;

    SeededRng rng(seed);
    auto random_matrix = [&]() {
        RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rng.small_entry();
        return m;
    };

    std::vector<std::vector<Rat>> limits;
    auto push_curve = [&](const PolyCurve& curve) {
        const auto coords = curve_plucker(curve, r - 1);
        bool all_zero = true;
        for (const auto& p : coords) all_zero = all_zero && upoly_is_zero(p);
        if (all_zero) return;  // degenerate direction, skip
        const LimitPoint lp = limit_point(coords);
        out.curves.push_back({lp.valuation, lp.point});
        limits.push_back(lp.point);
    };

    for (int c = 0; c < curve_count; ++c) push_curve(PolyCurve::line(U, random_matrix()));
    out.span_dim = static_cast<long>(span_rank(limits));

    // All linear limits projectively equal: retry with quadratic curves to
    // guard against a non-generic pencil.
    if (out.span_dim <= 1 && curve_count > 1) {
        out.quadratic_fallback = true;
        for (int c = 0; c < curve_count; ++c)
            push_curve(PolyCurve::quadratic(U, random_matrix(), random_matrix()));
        out.span_dim = static_cast<long>(span_rank(limits));
    }
    out.proj_dim = out.span_dim - 1;
    return out;
}

SmoothnessReport smoothness_probe(int n, int d, int chart_samples, std::uint64_t seed) {
    if (d < 1 || d > n - d) throw std::invalid_argument("smoothness_probe: need 1 <= d <= n-d");
    if (d > 3) throw std::invalid_argument("smoothness_probe: desk scale is d <= 3");

    SmoothnessReport report;
    report.n = n;
    report.d = d;
    report.seed = seed;
    report.expected_rank = static_cast<long>(d) * (n - d);
    SeededRng rng(seed);

    if (d == 1) {
        // The blow-up chain is empty: the chart is the affine cell itself and
        // its parametrization has constant Jacobian of full rank.
        for (int s = 0; s < chart_samples; ++s)
            report.samples.push_back({false, report.expected_rank, true});
        report.pass = chart_samples > 0;
        return report;
    }

    // Chart over the deepest stratum: a point of the preimage of the cell
    // around a subspace inside the bottom block is (phi, eta, [a], [L^2 a],
    // ...) with phi = c a. Variables: c, then eta (d x (n-2d)), then a (d x d).
    const int eta_count = d * (n - 2 * d);
    const int nvars = 1 + eta_count + d * d;
    std::vector<std::string> names;
    names.push_back("c");
    for (int i = 0; i < eta_count; ++i) names.push_back("e" + std::to_string(i + 1));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            names.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
    auto ring = PolyRing::make(names);

    const MultiPoly c_var = MultiPoly::variable(ring, 0);
    std::vector<std::vector<MultiPoly>> a(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            a[static_cast<std::size_t>(i)].push_back(MultiPoly::variable(
                ring, static_cast<std::size_t>(1 + eta_count + i * d + j)));

    // Cone coordinates and projective-factor boundaries.
    std::vector<MultiPoly> coords;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            coords.push_back(c_var * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    for (int i = 0; i < eta_count; ++i)
        coords.push_back(MultiPoly::variable(ring, static_cast<std::size_t>(1 + i)));
    std::vector<std::pair<std::size_t, std::size_t>> factors;  // [begin, end)
    for (int s = 1; s <= d - 1; ++s) {
        const std::size_t begin = coords.size();
        const auto subs = subsets_lex(d, s);
        for (const auto& rows : subs)
            for (const auto& cols : subs) coords.push_back(poly_minor(a, rows, cols, ring));
        factors.emplace_back(begin, coords.size());
    }

    report.pass = chart_samples > 0;
    for (int sample = 0; sample < chart_samples; ++sample) {
        const bool exceptional = (sample % 2 == 0);
        std::vector<Rat> point(static_cast<std::size_t>(nvars));
        for (int attempt = 0;; ++attempt) {
            if (attempt > 128)
                throw std::runtime_error("smoothness_probe: failed to sample full-rank chart");
            long c_val = exceptional ? 0 : rng.uniform_int(1, 10);
            point[0] = c_val;
            for (int i = 0; i < eta_count; ++i)
                point[static_cast<std::size_t>(1 + i)] = rng.small_entry();
            RationalMatrix a_val(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    const Rat v = rng.small_entry();
                    a_val.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
                    point[static_cast<std::size_t>(1 + eta_count + i * d + j)] = v;
                }
            if (a_val.det() != 0) break;
        }

        // Exact Jacobian of the cone coordinates, then affine-chart rows: for
        // each projective factor pin a nonzero coordinate u_{i0} and replace
        // row_i by u_{i0} row_i - u_i row_{i0}.
        std::vector<Rat> values(coords.size());
        RationalMatrix jac(coords.size(), static_cast<std::size_t>(nvars));
        for (std::size_t i = 0; i < coords.size(); ++i) {
            values[i] = coords[i].eval(point);
            for (std::size_t j = 0; j < static_cast<std::size_t>(nvars); ++j)
                jac.at(i, j) = coords[i].derivative(j).eval(point);
        }
        std::vector<std::vector<Rat>> chart_rows;
        std::vector<bool> in_factor(coords.size(), false);
        for (const auto& [begin, end] : factors) {
            std::size_t pin = begin;
            while (pin < end && values[pin] == 0) ++pin;
            if (pin == end) throw std::logic_error("smoothness_probe: all factor coords vanish");
            for (std::size_t i = begin; i < end; ++i) {
                in_factor[i] = true;
                if (i == pin) continue;
                std::vector<Rat> row(static_cast<std::size_t>(nvars));
                for (std::size_t j = 0; j < row.size(); ++j)
                    row[j] = values[pin] * jac.at(i, j) - values[i] * jac.at(pin, j);
                chart_rows.push_back(std::move(row));
            }
        }
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (in_factor[i]) continue;
            std::vector<Rat> row(static_cast<std::size_t>(nvars));
            for (std::size_t j = 0; j < row.size(); ++j) row[j] = jac.at(i, j);
            chart_rows.push_back(std::move(row));
        }

        const long rank = static_cast<long>(span_rank(chart_rows));
        const bool full = (rank == report.expected_rank);
        report.samples.push_back({exceptional, rank, full});
        if (!full) report.pass = false;
    }
    return report;
}

}  // namespace trgr
