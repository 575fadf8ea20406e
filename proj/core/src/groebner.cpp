#include "trgr/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace trgr {

namespace {

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_quot(const Monomial& b, const Monomial& a) {
    Monomial q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
    return q;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

bool lcm_is_product(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

MultiPoly shift_scale(const MultiPoly& g, const Monomial& q, const Rat& c) {
    MultiPoly out(g.ring());
    Monomial m(q.size());
    for (const auto& [mg, cg] : g.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = mg[i] + q[i];
        out.add_term(m, cg * c);
    }
    return out;
}

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& ord, long* steps, long budget) {
    MultiPoly work(f);
    MultiPoly rem(f.ring());
    while (!work.is_zero()) {
        if (budget >= 0 && steps && *steps > budget) return rem + work;
        const auto [lm, lc] = work.leading(ord);
        bool reduced = false;
        for (const MultiPoly& g : basis) {
            if (g.is_zero()) continue;
            const auto [gm, gc] = g.leading(ord);
            if (!divides(gm, lm)) continue;
            work = work - shift_scale(g, mono_quot(lm, gm), lc / gc);
            if (steps) ++(*steps);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            work.add_term(lm, -lc);
        }
    }
    return rem;
}

GroebnerResult buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& ord,
                          const GroebnerOptions& opts) {
    GroebnerResult res;
    std::vector<MultiPoly> G;
    for (const MultiPoly& g : gens)
        if (!g.is_zero()) G.push_back(g.primitive(ord));
    if (G.empty()) return res;

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    std::set<Pair> handled;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) pending.insert({i, j});

    auto over_budget = [&]() { return res.steps > opts.step_budget; };

    while (!pending.empty()) {
        if (over_budget()) {
            res.status = GbStatus::Diverged;
            res.basis = G;  // partial working set, not a Groebner basis
            return res;
        }
        // Normal selection: smallest lcm degree first.
        auto best = pending.begin();
        long best_deg = -1;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            const long deg = total_degree(mono_lcm(G[it->first].leading(ord).first,
                                                   G[it->second].leading(ord).first));
            if (best_deg < 0 || deg < best_deg) {
                best_deg = deg;
                best = it;
            }
        }
        const Pair pr = *best;
        pending.erase(best);
        handled.insert(pr);

        const auto [fm, fc] = G[pr.first].leading(ord);
        const auto [gm, gc] = G[pr.second].leading(ord);
        if (lcm_is_product(fm, gm)) continue;  // product criterion

        const Monomial lcm = mono_lcm(fm, gm);
        // Chain criterion: some third leading term divides the lcm and both
        // side pairs were already treated.
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == pr.first || k == pr.second) continue;
            if (!divides(G[k].leading(ord).first, lcm)) continue;
            const Pair a{std::min(k, pr.first), std::max(k, pr.first)};
            const Pair b{std::min(k, pr.second), std::max(k, pr.second)};
            if (handled.count(a) && handled.count(b)) chain = true;
        }
        if (chain) continue;

        MultiPoly spoly = shift_scale(G[pr.first], mono_quot(lcm, fm), 1 / fc) -
                          shift_scale(G[pr.second], mono_quot(lcm, gm), 1 / gc);
        ++res.steps;
        MultiPoly nf = normal_form(spoly, G, ord, &res.steps, opts.step_budget);
        if (over_budget()) {
            res.status = GbStatus::Diverged;
            res.basis = G;
            return res;
        }
        if (nf.is_zero()) continue;
        nf = nf.primitive(ord);
        const std::size_t idx = G.size();
        G.push_back(nf);
        for (std::size_t i = 0; i < idx; ++i) pending.insert({i, idx});
    }

    // Minimize: drop elements whose leading term is divisible by another's.
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        const Monomial mi = G[i].leading(ord).first;
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial mj = G[j].leading(ord).first;
            if (divides(mj, mi) && (mi != mj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // Reduce tails against the rest.
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly nf = normal_form(minimal[i], others, ord, &res.steps, -1);
        if (!nf.is_zero()) reduced.push_back(nf.primitive(ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return ord.less(a.leading(ord).first, b.leading(ord).first);
    });

    // Post-hoc certification: every input generator must reduce to zero.
    for (const MultiPoly& g : gens)
        if (!normal_form(g, reduced, ord, nullptr, -1).is_zero())
            throw std::logic_error("buchberger: input generator failed membership check");

    res.basis = std::move(reduced);
    return res;
}

bool is_groebner(const std::vector<MultiPoly>& basis, const MonomialOrder& ord) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const auto [mi, ci] = basis[i].leading(ord);
            const auto [mj, cj] = basis[j].leading(ord);
            const Monomial lcm = mono_lcm(mi, mj);
            const MultiPoly spoly = shift_scale(basis[i], mono_quot(lcm, mi), 1 / ci) -
                                    shift_scale(basis[j], mono_quot(lcm, mj), 1 / cj);
            if (!normal_form(spoly, basis, ord).is_zero()) return false;
        }
    return true;
}

ImplicitizeResult implicitize(const std::vector<std::pair<std::string, MultiPoly>>& param,
                              const GroebnerOptions& opts, int var_cap) {
    if (param.empty()) throw std::invalid_argument("implicitize: empty parametrization");
    const auto src = param.front().second.ring();
    for (const auto& [name, f] : param)
        if (f.ring()->names != src->names)
            throw std::invalid_argument("implicitize: mixed source rings");

    const std::size_t S = src->size();
    const std::size_t T = param.size();
    if (static_cast<int>(S + T) > var_cap)
        throw std::invalid_argument("implicitize: variable count " + std::to_string(S + T) +
                                    " exceeds cap " + std::to_string(var_cap));

    std::vector<std::string> names(src->names);
    for (const auto& [name, f] : param) names.push_back(name);
    auto big = PolyRing::make(names);

    auto lift = [&](const MultiPoly& f) {
        MultiPoly out(big);
        Monomial m(S + T, 0);
        for (const auto& [mf, c] : f.terms()) {
            std::copy(mf.begin(), mf.end(), m.begin());
            out.add_term(m, c);
        }
        return out;
    };

    std::vector<MultiPoly> gens;
    for (std::size_t j = 0; j < T; ++j)
        gens.push_back(MultiPoly::variable(big, S + j) - lift(param[j].second));

    const MonomialOrder ord = MonomialOrder::elimination(static_cast<int>(S));
    GroebnerResult gb = buchberger(gens, ord, opts);

    ImplicitizeResult out;
    out.steps = gb.steps;
    std::vector<std::string> tnames;
    for (const auto& [name, f] : param) tnames.push_back(name);
    out.ring = PolyRing::make(tnames);
    if (gb.status == GbStatus::Diverged) {
        out.status = GbStatus::Diverged;
        return out;
    }
    for (const MultiPoly& g : gb.basis) {
        if (!g.free_of_block(static_cast<int>(S))) continue;
        MultiPoly rel(out.ring);
        for (const auto& [m, c] : g.terms())
            rel.add_term(Monomial(m.begin() + static_cast<long>(S), m.end()), c);
        out.relations.push_back(rel.primitive(MonomialOrder::grevlex()));
    }
    return out;
}

}  // namespace trgr
