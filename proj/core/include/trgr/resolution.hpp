#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trgr/numeric.hpp"
#include "trgr/partition.hpp"

namespace trgr {

/// One summand Schur_w(V_{n-d}^*) (x) Schur_{lam^t}(U_d^perp) of a layer,
/// with an optional power of O(1) applied and the box partition it came from.
struct SheafTerm {
    GLWeight levi_weight;        // weight on the (n-d)-factor, length n-d
    Partition bundle_partition;  // lam^t, at most n-d parts
    int twist = 0;
    Partition source_lambda;
    Int levi_dim;  // weyl_dim(n-d, levi_weight), always >= 1
};

struct ComplexLayer {
    int index = 0;  // in [0, r^2]
    std::vector<SheafTerm> terms;
};

/// Partitions with at most r parts, first part at most n-d, total size k:
/// the shapes appearing in the k-th exterior power of the incidence bundle.
std::vector<Partition> koszul_layer(int k, int r, int n, int d);

/// Layers k = 0..r^2 of the direct-image complex resolving the structure
/// sheaf of the Schubert variety S_r. Every box partition either dies
/// (singular weight) or lands in layer |lam| - l(sigma); the surviving term
/// count is C(2r, r), layer 0 is the structure sheaf and layer r^2 is the
/// O(-r) term.
std::vector<ComplexLayer> build_complex(int n, int d, int r);

struct TwistedTerm {
    int m = 0;      // 0..r-1
    int layer = 0;  // r - m
    SheafTerm term;
    Int section_dim;  // levi_dim * C(n, m)
};

/// The r terms with nonzero sections after twisting by O(1); the m-th comes
/// from lam = (n-d-m, 0^{r-1}) and sits in layer r - m.
std::vector<TwistedTerm> twisted_h0_terms(int n, int d, int r);

/// Alternating sum sum_m (-1)^{r-1-m} section_dim(m): the Euler-characteristic
/// prediction for the dimension of the degree-one part of the ideal of S_r.
Int euler_char_sections(int n, int d, int r);

/// Integer combination of pairs (weight on the (n-d)-factor, weight on the
/// d-factor), both stored sl-reduced: an element of the Grothendieck ring of
/// Levi representations.
class GrothElement {
public:
    using Key = std::pair<GLWeight, GLWeight>;

    GrothElement() = default;

    /// Add c * [Schur_{w1} (x) Schur_{w2}]; keys are sl-reduced on insertion.
    void add(const GLWeight& w1, const GLWeight& w2, const Int& c);
    void add(const GrothElement& other, const Int& scale = 1);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Key, Int>& coeffs() const { return coeffs_; }

    /// Additive dimension functional: sum of coeff * dim1 * dim2.
    Int dimension() const;

    GrothElement operator+(const GrothElement& o) const;
    GrothElement operator-(const GrothElement& o) const;
    GrothElement operator-() const;
    bool operator==(const GrothElement& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

private:
    std::map<Key, Int> coeffs_;  // no zero coefficients stored
};

struct EulerIdentity {
    GrothElement lhs;
    GrothElement rhs;
    bool equal = false;
};

/// The Euler-characteristic identity for the section modules: the alternating
/// sum of the M_s terms, expanded by column Pieri products, against the
/// diagonal sum of wedge pairs. Both sides have total dimension equal to
/// truncated_dim(n, d, r-1).
EulerIdentity appendix_euler(int n, int d, int r);

}  // namespace trgr
