#include "trgr/index_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace trgr {

IndexSet::IndexSet(std::vector<int> elements, int n, int d)
    : elements_(std::move(elements)), n_(n), d_(d) {
    if (d < 1 || d >= n) throw std::invalid_argument("IndexSet: need 1 <= d < n");
    if (static_cast<int>(elements_.size()) != d)
        throw std::invalid_argument("IndexSet: wrong cardinality");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 1 || elements_[i] > n)
            throw std::invalid_argument("IndexSet: element out of range");
        if (i > 0 && elements_[i] <= elements_[i - 1])
            throw std::invalid_argument("IndexSet: elements must strictly increase");
    }
}

int IndexSet::degree() const {
    return static_cast<int>(
        std::count_if(elements_.begin(), elements_.end(), [this](int e) { return e > d_; }));
}

std::string IndexSet::key() const {
    std::string s;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(elements_[i]);
    }
    return s;
}

IndexSet schubert_index_set(int n, int d, int r) {
    if (r < 0 || r > d || d + r > n)
        throw std::invalid_argument("schubert_index_set: bad r");
    std::vector<int> e;
    for (int i = 1; i <= d - r; ++i) e.push_back(i);
    for (int i = d + 1; i <= d + r; ++i) e.push_back(i);
    return IndexSet(std::move(e), n, d);
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<IndexSet> enumerate_index_sets(int n, int d, int max_degree) {
    if (d < 1 || d >= n) throw std::invalid_argument("enumerate_index_sets: need 1 <= d < n");
    if (max_degree < 0 || max_degree > std::min(d, n - d))
        throw std::invalid_argument("enumerate_index_sets: max_degree out of range");

    std::vector<IndexSet> out;
    for (std::vector<int> s : subsets_lex(n, d)) {
        for (int& e : s) ++e;  // to 1-based
        IndexSet I(std::move(s), n, d);
        if (I.degree() <= max_degree) out.push_back(std::move(I));
    }
    return out;
}

Int truncated_dim(int n, int d, int r) {
    if (d < 1 || d > n - d) throw std::invalid_argument("truncated_dim: need 1 <= d <= n-d");
    if (r < 0 || r > d) throw std::invalid_argument("truncated_dim: need 0 <= r <= d");
    Int total = 0;
    for (int i = 0; i <= r; ++i) total += binomial(d, i) * binomial(n - d, i);
    return total;
}

}  // namespace trgr
