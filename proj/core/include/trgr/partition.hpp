#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace trgr {

/// Weakly decreasing tuple of nonnegative integers. Trailing zeros are
/// accepted on input and stripped, so (3,1,0,0) and (3,1) are the same value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);
    Partition(std::initializer_list<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    /// i-th part (0-based), zero beyond the length.
    long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    long sum() const;

    /// Conjugate diagram (rows become columns).
    Partition transpose() const;

    /// Diagram containment: mu[i] <= lambda[i] for all rows.
    bool contains(const Partition& mu) const;
    bool fits_in_box(long rows, long cols) const;

    std::string str() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<long> parts_;
};

/// Weakly decreasing integer tuple of a fixed length N; entries may be
/// negative (weights of duals and twists).
class GLWeight {
public:
    GLWeight() = default;
    explicit GLWeight(std::vector<long> entries);
    GLWeight(std::initializer_list<long> entries);

    static GLWeight constant(long c, std::size_t n);
    /// Pad a partition with zeros up to length n.
    static GLWeight from_partition(const Partition& lam, std::size_t n);

    const std::vector<long>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    long entry(std::size_t i) const { return entries_[i]; }

    /// mu* = (-mu_N, ..., -mu_1).
    GLWeight dual() const;
    /// Canonical representative with last entry zero; two weights restrict to
    /// the same special-linear module iff they reduce to the same value.
    GLWeight sl_reduced() const;
    /// Add c to every entry (determinant twist).
    GLWeight shifted(long c) const;

    std::string str() const;

    auto operator<=>(const GLWeight&) const = default;

private:
    std::vector<long> entries_;
};

}  // namespace trgr
