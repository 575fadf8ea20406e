#include "trgr/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace trgr {

std::shared_ptr<const PolyRing> PolyRing::make(std::vector<std::string> names) {
    auto r = std::make_shared<PolyRing>();
    r->names = std::move(names);
    return r;
}

std::shared_ptr<const PolyRing> PolyRing::standard(int nvars, const std::string& stem) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(nvars));
    for (int i = 1; i <= nvars; ++i) names.push_back(stem + std::to_string(i));
    return make(std::move(names));
}

long total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0L);
}

MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(0); }

MonomialOrder MonomialOrder::elimination(int block) {
    if (block < 1) throw std::invalid_argument("elimination order: block must be >= 1");
    return MonomialOrder(block);
}

namespace {

// Graded reverse lexicographic on a contiguous variable range [lo, hi).
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) throw std::invalid_argument("MonomialOrder: size mismatch");
    if (block_ > 0) {
        const std::size_t blk = static_cast<std::size_t>(block_);
        if (int c = grevlex_range(a, b, 0, std::min(blk, a.size())); c != 0) return c;
        if (blk >= a.size()) return 0;
        return grevlex_range(a, b, blk, a.size());
    }
    return grevlex_range(a, b, 0, a.size());
}

MultiPoly::MultiPoly(std::shared_ptr<const PolyRing> ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("MultiPoly: null ring");
}

MultiPoly MultiPoly::constant(std::shared_ptr<const PolyRing> ring, const Rat& c) {
    MultiPoly p(std::move(ring));
    p.add_term(Monomial(p.ring_->size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::shared_ptr<const PolyRing> ring, std::size_t i) {
    MultiPoly p(std::move(ring));
    if (i >= p.ring_->size()) throw std::out_of_range("MultiPoly::variable");
    Monomial m(p.ring_->size(), 0);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
}

long MultiPoly::degree() const {
    long deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, total_degree(m));
    return deg;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
    if (m.size() != ring_->size()) throw std::invalid_argument("add_term: bad monomial size");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_ring(const MultiPoly& o) const {
    if (!ring_ || !o.ring_) throw std::invalid_argument("MultiPoly: uninitialized");
    if (ring_ != o.ring_ && ring_->names != o.ring_->names)
        throw std::invalid_argument("MultiPoly: mixed rings");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_ring(o);
    MultiPoly out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_ring(o);
    MultiPoly out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_ring(o);
    MultiPoly out(ring_);
    Monomial prod(ring_->size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
            out.add_term(prod, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly out(ring_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

MultiPoly MultiPoly::operator-() const { return *this * Rat(-1); }

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= ring_->size()) throw std::out_of_range("derivative: bad variable");
    MultiPoly out(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial dm(m);
        --dm[var];
        out.add_term(dm, c * Rat(m[var]));
    }
    return out;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != ring_->size()) throw std::invalid_argument("eval: bad point size");
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) term *= point[i];
        total += term;
    }
    return total;
}

std::pair<Monomial, Rat> MultiPoly::leading(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

MultiPoly MultiPoly::primitive(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    Int den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : terms_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (leading(ord).second * scale < 0) scale = -scale;
    return *this * scale;
}

MultiPoly MultiPoly::monic(const MonomialOrder& ord) const {
    if (terms_.empty()) return *this;
    return *this * (1 / leading(ord).second);
}

bool MultiPoly::free_of_block(int block) const {
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < block && i < static_cast<int>(m.size()); ++i)
            if (m[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->names[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        std::string term =
            mono.empty() ? rat_str(mag) : (mag == 1 ? mono : rat_str(mag) + "*" + mono);
        if (first)
            s += (neg ? "-" : "") + term;
        else
            s += (neg ? " - " : " + ") + term;
        first = false;
    }
    return s;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return terms_ == o.terms_;
}

MultiPoly poly_minor(const std::vector<std::vector<MultiPoly>>& m,
                     const std::vector<int>& rows, const std::vector<int>& cols,
                     const std::shared_ptr<const PolyRing>& ring) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("poly_minor: ragged index lists");
    if (rows.empty()) return MultiPoly::constant(ring, 1);
    if (rows.size() == 1)
        return m[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(cols[0])];
    MultiPoly det(ring);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        std::vector<int> sub_cols;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (c != j) sub_cols.push_back(cols[c]);
        MultiPoly term = m[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(cols[j])] *
                         poly_minor(m, sub_rows, sub_cols, ring);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace trgr
