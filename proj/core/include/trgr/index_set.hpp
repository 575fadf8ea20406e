#pragma once

#include <compare>
#include <string>
#include <vector>

#include "trgr/numeric.hpp"

namespace trgr {

/// Cardinality-d subset of {1,...,n}, stored strictly increasing. Labels a
/// wedge basis vector / torus fixed point; the degree is the number of
/// elements exceeding d and grades the abelian radical action.
class IndexSet {
public:
    IndexSet(std::vector<int> elements, int n, int d);

    const std::vector<int>& elements() const { return elements_; }
    int n() const { return n_; }
    int d() const { return d_; }

    /// Number of elements strictly greater than d.
    int degree() const;

    /// Comma-joined element list, e.g. "1,3,4"; used as serialization key.
    std::string key() const;

    bool operator==(const IndexSet& o) const {
        return n_ == o.n_ && d_ == o.d_ && elements_ == o.elements_;
    }
    /// Lexicographic on the element sequence (the canonical coordinate order).
    bool operator<(const IndexSet& o) const { return elements_ < o.elements_; }

private:
    std::vector<int> elements_;
    int n_ = 0;
    int d_ = 0;
};

/// The index set I(r) = (1,...,d-r, d+1,...,d+r); has degree exactly r.
IndexSet schubert_index_set(int n, int d, int r);

/// All k-element subsets of {0,...,n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k);

/// All I with deg I <= max_degree, in lexicographic order on element lists.
std::vector<IndexSet> enumerate_index_sets(int n, int d, int max_degree);

/// sum_{i=0}^{r} C(d,i) C(n-d,i); requires 0 <= r <= d <= n-d.
Int truncated_dim(int n, int d, int r);

}  // namespace trgr
