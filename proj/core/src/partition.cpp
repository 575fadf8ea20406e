#include "trgr/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace trgr {

namespace {

void check_weakly_decreasing(const std::vector<long>& v, const char* what) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1])
            throw std::invalid_argument(std::string(what) + ": entries must be weakly decreasing");
}

std::string tuple_str(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    check_weakly_decreasing(parts_, "Partition");
    if (!parts_.empty() && parts_.back() < 0)
        throw std::invalid_argument("Partition: parts must be nonnegative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<long> parts)
    : Partition(std::vector<long>(parts)) {}

long Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<long> cols(static_cast<std::size_t>(parts_[0]), 0);
    for (long p : parts_)
        for (long j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

bool Partition::fits_in_box(long rows, long cols) const {
    return static_cast<long>(length()) <= rows && part(0) <= cols;
}

std::string Partition::str() const { return tuple_str(parts_); }

GLWeight::GLWeight(std::vector<long> entries) : entries_(std::move(entries)) {
    check_weakly_decreasing(entries_, "GLWeight");
}

GLWeight::GLWeight(std::initializer_list<long> entries)
    : GLWeight(std::vector<long>(entries)) {}

GLWeight GLWeight::constant(long c, std::size_t n) {
    return GLWeight(std::vector<long>(n, c));
}

GLWeight GLWeight::from_partition(const Partition& lam, std::size_t n) {
    if (lam.length() > n)
        throw std::invalid_argument("GLWeight::from_partition: too many parts");
    std::vector<long> e(n, 0);
    for (std::size_t i = 0; i < lam.length(); ++i) e[i] = lam.parts()[i];
    return GLWeight(std::move(e));
}

GLWeight GLWeight::dual() const {
    std::vector<long> e(entries_.rbegin(), entries_.rend());
    for (long& x : e) x = -x;
    return GLWeight(std::move(e));
}

GLWeight GLWeight::sl_reduced() const {
    if (entries_.empty()) return *this;
    return shifted(-entries_.back());
}

GLWeight GLWeight::shifted(long c) const {
    std::vector<long> e(entries_);
    for (long& x : e) x += c;
    return GLWeight(std::move(e));
}

std::string GLWeight::str() const { return tuple_str(entries_); }

}  // namespace trgr
