#include "trgr/resolution.hpp"

#include <functional>
#include <stdexcept>

#include "trgr/bwb.hpp"
#include "trgr/index_set.hpp"
#include "trgr/weyl.hpp"

namespace trgr {

namespace {

void check_ndr(int n, int d, int r) {
    if (d < 1 || d > n - d) throw std::invalid_argument("need 1 <= d <= n-d");
    if (r < 1 || r > d) throw std::invalid_argument("need 1 <= r <= d");
}

/// All partitions in the rows x cols box (at most `rows` parts, each <= cols).
std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<long> cur;
    std::function<void(int, long)> rec = [&](int row, long maxpart) {
        out.emplace_back(cur);
        if (row == rows) return;
        for (long p = 1; p <= maxpart; ++p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(0, cols);
    return out;
}

}  // namespace

std::vector<Partition> koszul_layer(int k, int r, int n, int d) {
    check_ndr(n, d, r);
    if (k < 0 || k > static_cast<long>(r) * (n - d))
        throw std::invalid_argument("koszul_layer: k out of range");
    std::vector<Partition> out;
    for (const Partition& lam : partitions_in_box(r, n - d))
        if (lam.sum() == k) out.push_back(lam);
    return out;
}

std::vector<ComplexLayer> build_complex(int n, int d, int r) {
    check_ndr(n, d, r);
    const int N = n - d;
    std::vector<ComplexLayer> layers(static_cast<std::size_t>(r * r + 1));
    for (int k = 0; k <= r * r; ++k) layers[static_cast<std::size_t>(k)].index = k;

    for (const Partition& lam : partitions_in_box(r, N)) {
        auto push = fiberwise_pushforward(lam, r, N);
        if (!push) continue;
        const long k = lam.sum() - push->inversions;
        if (k < 0 || k > static_cast<long>(r) * r)
            throw std::logic_error("build_complex: layer index out of bounds");
        SheafTerm term;
        term.levi_weight = push->weight;
        term.bundle_partition = lam.transpose();
        term.twist = 0;
        term.source_lambda = lam;
        term.levi_dim = weyl_dim(N, push->weight);
        layers[static_cast<std::size_t>(k)].terms.push_back(std::move(term));
    }
    return layers;
}

std::vector<TwistedTerm> twisted_h0_terms(int n, int d, int r) {
    check_ndr(n, d, r);
    const int N = n - d;
    std::vector<TwistedTerm> out;
    for (int m = 0; m < r; ++m) {
        std::vector<long> parts{static_cast<long>(N - m)};
        const Partition lam(parts);
        auto push = fiberwise_pushforward(lam, r, N);
        if (!push) throw std::logic_error("twisted_h0_terms: unexpected singular weight");
        TwistedTerm t;
        t.m = m;
        t.layer = static_cast<int>(lam.sum() - push->inversions);
        t.term.levi_weight = push->weight;
        t.term.bundle_partition = lam.transpose();
        t.term.twist = 1;
        t.term.source_lambda = lam;
        t.term.levi_dim = weyl_dim(N, push->weight);
        t.section_dim = t.term.levi_dim * binomial(n, m);
        out.push_back(std::move(t));
    }
    return out;
}

Int euler_char_sections(int n, int d, int r) {
    Int chi = 0;
    for (const TwistedTerm& t : twisted_h0_terms(n, d, r)) {
        if ((r - 1 - t.m) % 2 == 0)
            chi += t.section_dim;
        else
            chi -= t.section_dim;
    }
    return chi;
}

void GrothElement::add(const GLWeight& w1, const GLWeight& w2, const Int& c) {
    if (c == 0) return;
    Key key{w1.sl_reduced(), w2.sl_reduced()};
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void GrothElement::add(const GrothElement& other, const Int& scale) {
    for (const auto& [key, c] : other.coeffs_) add(key.first, key.second, c * scale);
}

Int GrothElement::dimension() const {
    Int total = 0;
    for (const auto& [key, c] : coeffs_) {
        const Int d1 = weyl_dim(static_cast<int>(key.first.size()), key.first);
        const Int d2 = weyl_dim(static_cast<int>(key.second.size()), key.second);
        total += c * d1 * d2;
    }
    return total;
}

GrothElement GrothElement::operator+(const GrothElement& o) const {
    GrothElement out(*this);
    out.add(o);
    return out;
}

GrothElement GrothElement::operator-(const GrothElement& o) const {
    GrothElement out(*this);
    out.add(o, -1);
    return out;
}

GrothElement GrothElement::operator-() const {
    GrothElement out;
    out.add(*this, -1);
    return out;
}

std::string GrothElement::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : coeffs_) {
        if (!s.empty()) s += " + ";
        s += c.get_str() + "*[" + key.first.str() + "|" + key.second.str() + "]";
    }
    return s;
}

EulerIdentity appendix_euler(int n, int d, int r) {
    check_ndr(n, d, r);
    const int N = n - d;
    EulerIdentity out;

    // Left side: alternating sum over s of M_s, where M_s splits over m into
    // (thin hook (r-s, 1^{N-r}) tensor a column of size s-m on the (n-d)-factor)
    // paired with a column of size m on the d-factor. The hook-times-column
    // products only need the column Pieri rule.
    for (int s = 0; s <= r - 1; ++s) {
        std::vector<long> hook_parts;
        hook_parts.push_back(r - s);
        for (int i = 0; i < N - r; ++i) hook_parts.push_back(1);
        const Partition hook(hook_parts);
        const Int sign = ((r - 1 - s) % 2 == 0) ? 1 : -1;
        for (int m = 0; m <= s; ++m) {
            const GLWeight right =
                GLWeight::from_partition(Partition{std::vector<long>(
                                             static_cast<std::size_t>(m), 1)},
                                         static_cast<std::size_t>(d));
            for (const Partition& mu : pieri_column(hook, s - m, N))
                out.lhs.add(GLWeight::from_partition(mu, static_cast<std::size_t>(N)),
                            right, sign);
        }
    }

    // Right side: sum over m of [Lambda^{n-d-m} V_{n-d}] (x) [Lambda^m V_d].
    for (int m = 0; m <= r - 1; ++m) {
        const GLWeight left = GLWeight::from_partition(
            Partition{std::vector<long>(static_cast<std::size_t>(N - m), 1)},
            static_cast<std::size_t>(N));
        const GLWeight right = GLWeight::from_partition(
            Partition{std::vector<long>(static_cast<std::size_t>(m), 1)},
            static_cast<std::size_t>(d));
        out.rhs.add(left, right, 1);
    }

    out.equal = (out.lhs == out.rhs);
    return out;
}

}  // namespace trgr
