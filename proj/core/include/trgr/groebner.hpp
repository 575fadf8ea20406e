#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trgr/poly.hpp"

namespace trgr {

enum class GbStatus { Ok, Diverged };

struct GroebnerOptions {
    long step_budget = 100000;  // reduction steps before giving up
};

struct GroebnerResult {
    GbStatus status = GbStatus::Ok;
    std::vector<MultiPoly> basis;  // reduced basis when Ok
    long steps = 0;
};

/// Remainder of f on division by the basis; counts cancellation steps into
/// *steps and stops early (returning f partially reduced) once the budget is
/// exhausted. budget < 0 means unlimited.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis,
                      const MonomialOrder& ord, long* steps = nullptr, long budget = -1);

/// Buchberger's algorithm with the product and chain criteria; returns the
/// reduced basis, or Diverged when the step budget runs out. Membership of
/// every input generator is re-certified by a zero normal form.
GroebnerResult buchberger(const std::vector<MultiPoly>& gens, const MonomialOrder& ord,
                          const GroebnerOptions& opts = {});

/// Post-hoc Buchberger criterion: every S-polynomial of the basis reduces to
/// zero. Used to re-verify returned bases independently of the run that
/// produced them.
bool is_groebner(const std::vector<MultiPoly>& basis, const MonomialOrder& ord);

struct ImplicitizeResult {
    GbStatus status = GbStatus::Ok;
    std::shared_ptr<const PolyRing> ring;  // ring of the coordinate names
    std::vector<MultiPoly> relations;      // generators of the relation ideal
    long steps = 0;
};

/// Relations among named coordinate polynomials: the kernel of the ring map
/// sending each coordinate name to its polynomial, computed by eliminating
/// the source variables with a block order. Throws when the combined variable
/// count exceeds var_cap (elimination blows up quickly; the cap is a guard,
/// the step budget is the brake).
ImplicitizeResult implicitize(const std::vector<std::pair<std::string, MultiPoly>>& param,
                              const GroebnerOptions& opts = {}, int var_cap = 12);

}  // namespace trgr
