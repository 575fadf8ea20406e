#include "acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <sstream>

#include "cech_p1.hpp"
#include "trgr/bwb.hpp"
#include "trgr/curves.hpp"
#include "trgr/fibers.hpp"
#include "trgr/groebner.hpp"
#include "trgr/index_set.hpp"
#include "trgr/plucker.hpp"
#include "trgr/resolution.hpp"
#include "trgr/vanish.hpp"
#include "trgr/weyl.hpp"

namespace trgr::checks {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Diverged: return "diverged";
    }
    return "unknown";
}

namespace {

struct Failure {
    std::ostringstream msg;
    bool any = false;
    template <typename T>
    Failure& operator<<(const T& t) {
        if (any) msg << "; ";
        msg << t;
        any = true;
        return *this;
    }
};

CheckResult check_dimension_formula() {
    CheckResult res{1, "dimension-formula", CheckStatus::Pass, "", 0};
    Failure fail;
    long cases = 0;
    for (int n = 2; n <= 8; ++n)
        for (int d = 1; d <= std::min(4, n - d); ++d) {
            if (d > n - d) continue;
            for (int r = 0; r <= d; ++r) {
                const Int by_formula = truncated_dim(n, d, r);
                const Int by_basis = static_cast<long>(enumerate_index_sets(n, d, r).size());
                ++cases;
                if (by_formula != by_basis)
                    fail << "(" << n << "," << d << "," << r << ") formula " << by_formula
                         << " != basis " << by_basis;
            }
        }
    if (fail.any) {
        res.status = CheckStatus::Fail;
        res.details = fail.msg.str();
    } else {
        res.details = std::to_string(cases) + " triples, formula = basis count";
    }
    return res;
}

CheckResult check_resolution_shape() {
    CheckResult res{2, "resolution-shape", CheckStatus::Pass, "", 0};
    Failure fail;
    long cases = 0;
    for (int nd = 1; nd <= 6; ++nd)
        for (int d = 1; d <= nd; ++d)
            for (int r = 1; r <= d; ++r) {
                const int n = d + nd;
                const auto layers = build_complex(n, d, r);
                ++cases;
                long terms = 0;
                for (const auto& layer : layers) terms += static_cast<long>(layer.terms.size());
                const Int expected = binomial(2 * r, r);
                if (expected != terms)
                    fail << "(" << n << "," << d << "," << r << ") terms " << terms
                         << " != C(2r,r) " << expected;
                if (static_cast<int>(layers.size()) != r * r + 1)
                    fail << "(" << n << "," << d << "," << r << ") layer range";
                const auto& f0 = layers.front();
                if (f0.terms.size() != 1 || !f0.terms[0].source_lambda.empty() ||
                    f0.terms[0].levi_dim != 1 || !f0.terms[0].bundle_partition.empty())
                    fail << "(" << n << "," << d << "," << r << ") F_0 is not the structure sheaf";
                const auto& top = layers.back();
                const Partition box(std::vector<long>(static_cast<std::size_t>(r), nd));
                if (top.terms.size() != 1 || top.terms[0].source_lambda != box ||
                    top.terms[0].levi_dim != 1 ||
                    top.terms[0].bundle_partition !=
                        Partition(std::vector<long>(static_cast<std::size_t>(nd), r)))
                    fail << "(" << n << "," << d << "," << r << ") F_{r^2} is not the O(-r) term";
            }
    if (fail.any) {
        res.status = CheckStatus::Fail;
        res.details = fail.msg.str();
    } else {
        res.details = std::to_string(cases) + " complexes, C(2r,r) terms, correct boundary layers";
    }
    return res;
}

CheckResult check_bwb_gate() {
    CheckResult res{3, "bwb-convention-gate", CheckStatus::Pass, "", 0};
    Failure fail;
    for (int k = -5; k <= 5; ++k) {
        const auto [h0, h1] = cech_p1_cohomology(k);
        BundleWeight bw{GLWeight{k}, GLWeight{0}, 2, 1};
        const CohomologyResult c = bwb(bw);
        Int got_h0 = 0, got_h1 = 0;
        if (!c.vanishes && c.degree == 0) got_h0 = c.dimension;
        if (!c.vanishes && c.degree == 1) got_h1 = c.dimension;
        if (got_h0 != h0 || got_h1 != h1)
            fail << "O(" << k << "): bwb (" << got_h0 << "," << got_h1 << ") vs Cech (" << h0
                 << "," << h1 << ")";
    }
    for (int n = 2; n <= 8; ++n)
        for (int d = 1; d < n; ++d) {
            BundleWeight bw{GLWeight::constant(1, static_cast<std::size_t>(d)),
                            GLWeight::constant(0, static_cast<std::size_t>(n - d)), n, d};
            const CohomologyResult c = bwb(bw);
            if (c.vanishes || c.degree != 0 || c.dimension != binomial(n, d))
                fail << "O(1) on (" << n << "," << d << ")";
        }
    if (fail.any) {
        res.status = CheckStatus::Fail;
        res.details = fail.msg.str();
    } else {
        res.details = "line bundles O(-5..5) match the two-chart oracle; h0(O(1)) = C(n,d)";
    }
    return res;
}

CheckResult check_twisted_sections(const AcceptanceOptions& opts) {
    CheckResult res{4, "twisted-ideal-sections", CheckStatus::Pass, "", 0};
    Failure fail;
    const std::vector<std::array<int, 3>> triples{
        {4, 2, 2}, {5, 2, 2}, {6, 2, 2}, {6, 3, 2}, {6, 3, 3}};
    std::ostringstream ok;
    for (const auto& [n, d, r] : triples) {
        const Int euler = euler_char_sections(n, d, r);
        const Int expected = truncated_dim(n, d, r - 1);
        if (euler != expected)
            fail << "(" << n << "," << d << "," << r << ") euler " << euler
                 << " != truncated dim " << expected;
        for (std::uint64_t seed : opts.seeds) {
            std::uint64_t counter = 0;
            auto sampler = [&, n = n, d = d, r = r]() {
                std::vector<std::vector<Rat>> batch;
                for (int i = 0; i < 40; ++i) {
                    const auto U =
                        sample_schubert(n, d, r, r, seed * 1000003ULL + (++counter));
                    batch.push_back(plucker(U, d).coords);
                }
                return batch;
            };
            const auto stab =
                stabilized_vanishing_dim(sampler, 1, opts.vanish_samples,
                                         opts.vanish_samples + 80);
            if (!stab.stabilized)
                fail << "(" << n << "," << d << "," << r << ") seed " << seed
                     << " interpolation did not stabilize";
            else if (stab.dim != euler)
                fail << "(" << n << "," << d << "," << r << ") seed " << seed
                     << " interpolation dim " << stab.dim << " != euler " << euler;
        }
        ok << " (" << n << "," << d << "," << r << ")=" << euler;
    }
    if (fail.any) {
        res.status = CheckStatus::Fail;
        res.details = fail.msg.str();
    } else {
        res.details = "euler = interpolation dim = truncated dim:" + ok.str();
    }
    return res;
}

CheckResult check_appendix_identity() {
    CheckResult res{5, "grothendieck-identity", CheckStatus::Pass, "", 0};
    Failure fail;
    long cases = 0;
    for (int n = 2; n <= 7; ++n)
        for (int d = 1; d <= n - d; ++d)
            for (int r = 1; r <= std::min(3, d); ++r) {
                const EulerIdentity id = appendix_euler(n, d, r);
                ++cases;
                if (!id.equal)
                    fail << "(" << n << "," << d << "," << r << ") sides differ";
                const Int expected = truncated_dim(n, d, r - 1);
                if (id.lhs.dimension() != expected || id.rhs.dimension() != expected)
                    fail << "(" << n << "," << d << "," << r << ") dimension != " << expected;
            }
    if (fail.any) {
        res.status = CheckStatus::Fail;
        res.details = fail.msg.str();
    } else {
        res.details = std::to_string(cases) + " identities, equal with matching dimension";
    }
    return res;
}

CheckResult check_implicitization(const AcceptanceOptions& opts) {
    CheckResult res{6, "plucker-implicitization", CheckStatus::Pass, "", 0};
    const int n = 4, d = 2;

    // Homogenized chart parametrization: top block z0 * Id, bottom block the
    // matrix of chart variables; every coordinate of degree e carries z0^{d-e}.
    std::vector<std::string> src_names{"z0"};
    for (int i = 0; i < n - d; ++i)
        for (int j = 0; j < d; ++j)
            src_names.push_back("z" + std::to_string(d + i + 1) + std::to_string(j + 1));
    auto src = PolyRing::make(src_names);

    std::vector<std::vector<MultiPoly>> Z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) {
            MultiPoly entry(src);
            if (i < d) {
                if (i == j) entry = MultiPoly::variable(src, 0);
            } else {
                entry = MultiPoly::variable(src, static_cast<std::size_t>(1 + (i - d) * d + j));
            }
            Z[static_cast<std::size_t>(i)].push_back(entry);
        }

    std::vector<std::pair<std::string, MultiPoly>> param;
    std::vector<int> all_cols{0, 1};
    for (const IndexSet& I : enumerate_index_sets(n, d, d)) {
        std::vector<int> rows;
        for (int e : I.elements()) rows.push_back(e - 1);
        std::string name = "p";
        for (int e : I.elements()) name += std::to_string(e);
        param.emplace_back(name, poly_minor(Z, rows, all_cols, src));
    }

    GroebnerOptions gopts;
    gopts.step_budget = opts.groebner_budget;
    ImplicitizeResult impl;
    try {
        impl = implicitize(param, gopts, opts.groebner_var_cap);
    } catch (const std::exception& e) {
        res.status = CheckStatus::Fail;
        res.details = std::string("implicitize threw: ") + e.what();
        return res;
    }
    if (impl.status == GbStatus::Diverged) {
        res.status = CheckStatus::Diverged;
        res.details = "elimination exceeded the step budget (" +
                      std::to_string(opts.groebner_budget) + ")";
        return res;
    }

    Failure fail;
    // Expected quadric p12*p34 - p13*p24 + p14*p23 up to sign and scale.
    auto var = [&](const std::string& name) {
        for (std::size_t i = 0; i < impl.ring->names.size(); ++i)
            if (impl.ring->names[i] == name) return MultiPoly::variable(impl.ring, i);
        throw std::logic_error("missing coordinate " + name);
    };
    const MultiPoly quad =
        (var("p12") * var("p34") - var("p13") * var("p24") + var("p14") * var("p23"))
            .primitive(MonomialOrder::grevlex());
    if (impl.relations.size() != 1) {
        fail << "expected a single relation, got " << impl.relations.size();
    } else {
        const MultiPoly got = impl.relations[0].primitive(MonomialOrder::grevlex());
        if (!(got == quad || got == -quad)) fail << "relation is not the Plucker quadric";
    }

    // 100 sampled orbit points satisfy the quadric exactly.
    SeededRng rng(opts.seeds.empty() ? 1 : opts.seeds[0]);
    for (int s = 0; s < 100; ++s) {
        RationalMatrix z(static_cast<std::size_t>(n - d), static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < z.rows(); ++i)
            for (std::size_t j = 0; j < z.cols(); ++j) z.at(i, j) = rng.small_entry();
        const OrbitPoint pt = orbit_point(z, {});
        if (quad.eval(pt.base.coords) != 0) {
            fail << "sampled orbit point violates the quadric";
            break;
        }
    }

    if (fail.any) {
        res.status = CheckStatus::Fail;
        res.details = fail.msg.str();
    } else {
        res.details = "single quadric recovered; 100 orbit points satisfy it (steps " +
                      std::to_string(impl.steps) + ")";
    }
    return res;
}

CheckResult check_exceptional_fiber(const AcceptanceOptions& opts) {
    CheckResult res{7, "exceptional-fiber-p34", CheckStatus::Pass, "", 0};
    Failure fail;
    const RationalMatrix U =
        RationalMatrix::from_ints(4, 2, {0, 0, 0, 0, 1, 0, 0, 1});
    for (std::uint64_t seed : opts.seeds) {
        const ExceptionalProbe probe = exceptional_probe(U, 2, opts.probe_curves, seed);
        if (probe.proj_dim != 3)
            fail << "seed " << seed << " span dimension " << probe.proj_dim << " != 3";
    }
    if (fail.any) {
        res.status = CheckStatus::Fail;
        res.details = fail.msg.str();
    } else {
        res.details = "limit span is a projective 3-space for every seed";
    }
    return res;
}

CheckResult check_minor_independence(const AcceptanceOptions& opts) {
    CheckResult res{8, "minor-jacobian-rank", CheckStatus::Pass, "", 0};
    Failure fail;
    for (int m = 2; m <= 4; ++m) {
        auto ring = PolyRing::standard(m * m, "x");
        std::vector<std::vector<MultiPoly>> mat(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                mat[static_cast<std::size_t>(i)].push_back(
                    MultiPoly::variable(ring, static_cast<std::size_t>(i * m + j)));
        std::vector<MultiPoly> minors;
        const auto subs = subsets_lex(m, m - 1);
        for (const auto& rows : subs)
            for (const auto& cols : subs) minors.push_back(poly_minor(mat, rows, cols, ring));
        SeededRng rng(opts.seeds.empty() ? 1 : opts.seeds[0]);
        const GenericRank gr = generic_jacobian_rank(minors, rng, 3);
        if (!gr.agreed)
            fail << "m=" << m << " rank disagrees between sample points (non-generic sample)";
        else if (gr.rank != static_cast<long>(m) * m)
            fail << "m=" << m << " rank " << gr.rank << " != " << m * m;
    }
    if (fail.any) {
        res.status = CheckStatus::Fail;
        res.details = fail.msg.str();
    } else {
        res.details = "corank-one minor maps have Jacobian rank m^2 for m in {2,3,4}";
    }
    return res;
}

CheckResult check_cell_geometry() {
    CheckResult res{9, "cell-intersections", CheckStatus::Pass, "", 0};
    Failure fail;
    long cases = 0;
    for (int n = 2; n <= 8; ++n)
        for (int d = 1; d <= n - d; ++d) {
            const auto all = enumerate_index_sets(n, d, std::min(d, n - d));
            for (const IndexSet& J : all)
                for (int r = 0; r <= d; ++r) {
                    const CellIntersection ci = cell_intersection(J, r);
                    ++cases;
                    if (r > J.degree()) {
                        if (ci.stratum != CellStratum::Empty)
                            fail << "(" << n << "," << d << ") J=" << J.key() << " r=" << r
                                 << " should be empty";
                        continue;
                    }
                    if (ci.stratum == CellStratum::Empty) {
                        fail << "(" << n << "," << d << ") J=" << J.key() << " r=" << r
                             << " unexpectedly empty";
                        continue;
                    }
                    const long expect = static_cast<long>(d) * (n - d) - static_cast<long>(r) * r;
                    if (ci.dimension != expect)
                        fail << "(" << n << "," << d << ") J=" << J.key() << " r=" << r
                             << " dim " << ci.dimension << " != " << expect;
                    if (r == J.degree() && ci.stratum != CellStratum::Affine)
                        fail << "(" << n << "," << d << ") J=" << J.key() << " r=" << r
                             << " should be pure affine";
                }
        }
    if (fail.any) {
        res.status = CheckStatus::Fail;
        res.details = fail.msg.str();
    } else {
        res.details = std::to_string(cases) + " cell pairs with codimension r^2";
    }
    return res;
}

CheckResult check_demazure_duality(const AcceptanceOptions& opts) {
    CheckResult res{10, "schubert-demazure-duality", CheckStatus::Pass, "", 0};
    Failure fail;
    long cases = 0;
    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d <= n - d; ++d) {
            for (int i = 0; i < opts.demazure_samples; ++i) {
                const int m = i % (d + 1);
                const std::uint64_t seed =
                    (opts.seeds.empty() ? 1 : opts.seeds[i % opts.seeds.size()]) * 7000003ULL +
                    static_cast<std::uint64_t>(i) * 1000003ULL + static_cast<std::uint64_t>(n * 64 + d);
                const RationalMatrix U = sample_schubert(n, d, 0, m, seed);
                const PluckerVector pv = plucker(U, d);
                for (int r = 1; r <= d; ++r) {
                    bool low_coords_vanish = true;
                    for (std::size_t c = 0; c < pv.index.size(); ++c)
                        if (pv.index[c].degree() <= r - 1 && pv.coords[c] != 0)
                            low_coords_vanish = false;
                    ++cases;
                    if (schubert_member(U, r) != low_coords_vanish) {
                        fail << "(" << n << "," << d << ") m=" << m << " r=" << r
                             << " membership and coordinate vanishing disagree";
                        i = opts.demazure_samples;  // stop this (n, d)
                        break;
                    }
                }
            }
        }
    if (fail.any) {
        res.status = CheckStatus::Fail;
        res.details = fail.msg.str();
    } else {
        res.details = std::to_string(cases) +
                      " samples: membership == vanishing of low-degree coordinates";
    }
    return res;
}

CheckResult check_smoothness(const AcceptanceOptions& opts) {
    CheckResult res{11, "complete-blowup-smoothness", CheckStatus::Pass, "", 0};
    Failure fail;
    for (std::uint64_t seed : opts.seeds) {
        const SmoothnessReport rep = smoothness_probe(4, 2, opts.smooth_samples, seed);
        if (!rep.pass) {
            long bad = 0;
            for (const auto& s : rep.samples)
                if (!s.full) ++bad;
            fail << "seed " << seed << ": " << bad << " samples below rank "
                 << rep.expected_rank;
        }
    }
    if (fail.any) {
        res.status = CheckStatus::Fail;
        res.details = fail.msg.str();
    } else {
        res.details = "full Jacobian rank 4 at every sampled chart point, all seeds";
    }
    return res;
}

}  // namespace

std::vector<CheckResult> run_acceptance(const AcceptanceOptions& opts) {
    std::vector<std::function<CheckResult()>> checks{
        [] { return check_dimension_formula(); },
        [] { return check_resolution_shape(); },
        [] { return check_bwb_gate(); },
        [&] { return check_twisted_sections(opts); },
        [] { return check_appendix_identity(); },
        [&] { return check_implicitization(opts); },
        [&] { return check_exceptional_fiber(opts); },
        [&] { return check_minor_independence(opts); },
        [] { return check_cell_geometry(); },
        [&] { return check_demazure_duality(opts); },
        [&] { return check_smoothness(opts); },
    };
    std::vector<CheckResult> out;
    for (auto& fn : checks) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult r = fn();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace trgr::checks
