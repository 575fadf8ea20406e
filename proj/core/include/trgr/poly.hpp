#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "trgr/numeric.hpp"

namespace trgr {

/// Exponent vector; size equals the ring's variable count.
using Monomial = std::vector<int>;

/// Named variable set shared by the polynomials of one computation.
struct PolyRing {
    std::vector<std::string> names;

    static std::shared_ptr<const PolyRing> make(std::vector<std::string> names);
    /// x1, ..., xk.
    static std::shared_ptr<const PolyRing> standard(int nvars, const std::string& stem = "x");
    std::size_t size() const { return names.size(); }
};

long total_degree(const Monomial& m);

/// Total order on monomials compatible with multiplication: graded reverse
/// lexicographic, or a block elimination order whose leading block consists
/// of the first `block` variables.
class MonomialOrder {
public:
    static MonomialOrder grevlex();
    static MonomialOrder elimination(int block);

    bool is_elimination() const { return block_ > 0; }
    int block() const { return block_; }

    /// Negative when a < b, zero when equal, positive when a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    explicit MonomialOrder(int block) : block_(block) {}
    int block_ = 0;  // 0 = plain grevlex
};

/// Multivariate polynomial with exact rational coefficients over a shared
/// ring; no zero coefficients are stored.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::shared_ptr<const PolyRing> ring);

    static MultiPoly constant(std::shared_ptr<const PolyRing> ring, const Rat& c);
    static MultiPoly variable(std::shared_ptr<const PolyRing> ring, std::size_t i);

    const std::shared_ptr<const PolyRing>& ring() const { return ring_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long degree() const;  // total degree; -1 for the zero polynomial

    void add_term(const Monomial& m, const Rat& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    MultiPoly operator-() const;

    MultiPoly derivative(std::size_t var) const;
    Rat eval(const std::vector<Rat>& point) const;

    /// Leading term with respect to an order.
    std::pair<Monomial, Rat> leading(const MonomialOrder& ord) const;

    /// Scale so that coefficients are coprime integers with positive leading
    /// coefficient (content stripping; keeps exact arithmetic viable).
    MultiPoly primitive(const MonomialOrder& ord) const;
    /// Scale so the leading coefficient is one.
    MultiPoly monic(const MonomialOrder& ord) const;

    /// True when no variable of the leading block occurs.
    bool free_of_block(int block) const;

    std::string str() const;

    bool operator==(const MultiPoly& o) const;

private:
    std::shared_ptr<const PolyRing> ring_;
    std::map<Monomial, Rat> terms_;

    void check_ring(const MultiPoly& o) const;
};

/// Determinant of the square submatrix of a matrix of polynomials, by Laplace
/// expansion (sizes here are small).
MultiPoly poly_minor(const std::vector<std::vector<MultiPoly>>& m,
                     const std::vector<int>& rows, const std::vector<int>& cols,
                     const std::shared_ptr<const PolyRing>& ring);

}  // namespace trgr
